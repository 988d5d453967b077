"""Synthetic k-uniform hypergraph models and reference-preserving null models.

All generators are deterministic functions of their parameters and a 64-bit
seed feeding numpy's PCG64 (``np.random.default_rng``). Callers that need
several independent samples should spawn child seeds with
``np.random.SeedSequence(seed).spawn(...)`` rather than reusing one stream.

Weighted sampling without replacement uses sequential draws with
renormalization (cumulative-sum inversion, zeroing the drawn weight).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import DataError
from .hypergraph import Hypergraph

NULL_MODELS = ("er", "cl", "cl-uniform")


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _uniform_kset(rng: np.random.Generator, n: int, k: int) -> tuple[int, ...]:
    return tuple(sorted(rng.choice(n, size=k, replace=False).tolist()))


def _weighted_sample(rng: np.random.Generator, weights: np.ndarray, k: int) -> tuple[int, ...]:
    """k distinct indices by sequential weighted draws with renormalization."""
    w = weights.astype(float).copy()
    picked = []
    for _ in range(k):
        cum = np.cumsum(w)
        total = cum[-1]
        if total <= 0:
            raise DataError("weighted sampling ran out of positive weights")
        u = rng.random() * total
        idx = int(np.searchsorted(cum, u, side="right"))
        idx = min(idx, len(w) - 1)
        picked.append(idx)
        w[idx] = 0.0
    return tuple(sorted(picked))


def gen_erh(n: int, m: int, k: int, seed) -> Hypergraph:
    """m distinct k-sets sampled uniformly from the C(n, k) possibilities."""
    if k < 1 or k > n:
        raise DataError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = math.comb(n, k)
    if m > total:
        raise DataError(f"m={m} exceeds C({n},{k})={total}")
    rng = _rng(seed)
    # rejection sampling stalls when m is a large fraction of the universe;
    # enumerate in that regime instead
    if total <= 10 ** 6 and m * 4 >= total:
        universe = list(combinations(range(n), k))
        idx = rng.choice(total, size=m, replace=False)
        edges = [universe[i] for i in sorted(idx.tolist())]
    else:
        chosen: set[tuple[int, ...]] = set()
        edges = []
        while len(edges) < m:
            e = _uniform_kset(rng, n, k)
            if e not in chosen:
                chosen.add(e)
                edges.append(e)
    return Hypergraph(n, [(e, 1.0) for e in edges])


def gen_sfh(n: int, m: int, k: int, mu: float, seed) -> Hypergraph:
    """Scale-free hypergraph: vertex i drawn with probability ~ (i+1)^(-mu).

    Runs m rounds; a round that redraws an existing edge set is consumed
    without adding, so the result can have fewer than m edges. The degree
    tail follows a power law with exponent 1 + 1/mu.
    """
    if not (0.0 < mu < 1.0):
        raise DataError(f"mu must lie in (0, 1), got {mu}")
    if k < 1 or k > n:
        raise DataError(f"need 1 <= k <= n, got k={k}, n={n}")
    rng = _rng(seed)
    weights = np.arange(1, n + 1, dtype=float) ** (-mu)
    chosen: set[tuple[int, ...]] = set()
    edges = []
    for _ in range(m):
        e = _weighted_sample(rng, weights, k)
        if e not in chosen:
            chosen.add(e)
            edges.append(e)
    return Hypergraph(n, [(e, 1.0) for e in edges])


def _wsh_lattice(n: int, d: int, k: int) -> list[tuple[int, ...]]:
    """Ring lattice: stride-s windows for s = 1..d/k, plus one extra edge per
    (k+1)-wide window at every (k+1)-th position."""
    if k < 2 or n <= k:
        raise DataError(f"lattice needs n > k >= 2, got n={n}, k={k}")
    if d < k or d % k != 0:
        raise DataError(f"regular degree d={d} must be a positive multiple of k={k}")
    layers = d // k
    if layers * (k - 1) >= n:
        raise DataError(f"stride layers for d={d} do not fit on a ring of {n} vertices")

    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def push(e: tuple[int, ...], required: bool) -> None:
        if e in seen:
            if required:
                raise DataError(f"infeasible lattice (n={n}, d={d}, k={k}): duplicate edge {e}")
            return
        seen.add(e)
        edges.append(e)

    for s in range(1, layers + 1):
        for i in range(n):
            push(tuple(sorted((i + s * j) % n for j in range(k))), required=True)

    for i in range(0, n, k + 1):
        window = sorted((i + j) % n for j in range(k + 1))
        for sub in combinations(window, k):
            if sub not in seen:
                push(sub, required=False)
                break
    return edges


def gen_wsh(n: int, d: int, k: int, p_rewire: float, seed) -> Hypergraph:
    """Small-world hypergraph: ring lattice plus random rewiring.

    Every initial hyperedge is visited once in construction order; with
    probability ``p_rewire`` a uniformly random k-set replaces it, unless
    that k-set already exists. The edge count is preserved.
    """
    if not (0.0 <= p_rewire <= 1.0):
        raise DataError(f"p_rewire must lie in [0, 1], got {p_rewire}")
    edges = _wsh_lattice(n, d, k)
    rng = _rng(seed)
    current = set(edges)
    for pos in range(len(edges)):
        if rng.random() < p_rewire:
            cand = _uniform_kset(rng, n, k)
            if cand not in current:
                current.discard(edges[pos])
                current.add(cand)
                edges[pos] = cand
    return Hypergraph(n, [(e, 1.0) for e in edges])


# ---------------------------------------------------------------------------
# null models (reference-preserving random ensembles)
#
# Null models use structural quantities of the reference -- membership
# counts d(u), cardinalities d(e), total incidences c -- and emit
# unit-weight hypergraphs.


def _structural(ref: Hypergraph):
    if ref.m == 0:
        raise DataError("null model needs a nonempty reference hypergraph")
    dv = ref.structural_degrees().astype(float)
    de = np.array([len(vs) for vs, _ in ref.edges], dtype=float)
    return dv, de, float(de.sum())


def _edges_from_membership(mask: np.ndarray) -> list[tuple[int, ...]]:
    # independent-membership sampling can produce empty or repeated edge
    # sets; both are dropped to keep the hypergraph a set of edges
    out = []
    seen = set()
    for row in mask:
        members = tuple(np.flatnonzero(row).tolist())
        if members and members not in seen:
            seen.add(members)
            out.append(members)
    return out


def er_membership_probability(ref: Hypergraph) -> float:
    """p = c / (m n), the mean vertex-edge membership rate of the reference."""
    _, _, c = _structural(ref)
    return c / (ref.m * ref.n)


def null_er(ref: Hypergraph, seed) -> Hypergraph:
    """Each of the m*n vertex-edge memberships flips with p = c/(m n)."""
    p = er_membership_probability(ref)
    rng = _rng(seed)
    mask = rng.random((ref.m, ref.n)) < p
    return Hypergraph(ref.n, [(e, 1.0) for e in _edges_from_membership(mask)])


def null_cl(ref: Hypergraph, seed) -> Hypergraph:
    """Membership probability d(u) d(e) / c preserves expected degrees and sizes."""
    dv, de, c = _structural(ref)
    if dv.max() * de.max() > c:
        raise DataError("degree/size sequences violate max d(u) d(e) <= c")
    rng = _rng(seed)
    P = np.outer(de, dv) / c
    mask = rng.random((ref.m, ref.n)) < P
    return Hypergraph(ref.n, [(e, 1.0) for e in _edges_from_membership(mask)])


def null_cl_uniform(ref: Hypergraph, k: int, seed) -> Hypergraph:
    """k-uniform degree-preserving null: vertices drawn with p_i = d(v_i)/c."""
    dv, _, c = _structural(ref)
    if int((dv > 0).sum()) < k:
        raise DataError(f"reference has fewer than k={k} vertices of positive degree")
    rng = _rng(seed)
    chosen: set[tuple[int, ...]] = set()
    edges = []
    for _ in range(ref.m):
        e = _weighted_sample(rng, dv / c, k)
        if e not in chosen:
            chosen.add(e)
            edges.append(e)
    return Hypergraph(ref.n, [(e, 1.0) for e in edges])


def default_null_model(ref: Hypergraph) -> str:
    """cl-uniform for uniform references, cl otherwise."""
    return "cl-uniform" if ref.m > 0 and ref.is_uniform() else "cl"


def sample_null(ref: Hypergraph, model: str, seed, k: Optional[int] = None) -> Hypergraph:
    if model == "er":
        return null_er(ref, seed)
    if model == "cl":
        return null_cl(ref, seed)
    if model == "cl-uniform":
        kk = k if k is not None else ref.max_cardinality
        return null_cl_uniform(ref, kk, seed)
    raise DataError(f"unknown null model {model!r}")


@dataclass(frozen=True)
class GenSpec:
    """Declarative description of one generator invocation (CLI mirror)."""

    model: str
    n: int = 0
    m: int = 0
    k: int = 0
    mu: float = 0.5
    p_rewire: float = 0.1
    d: int = 0
    seed: int = 0
    ref: Optional[Hypergraph] = None


def generate(spec: GenSpec) -> Hypergraph:
    if spec.model == "erh":
        return gen_erh(spec.n, spec.m, spec.k, spec.seed)
    if spec.model == "sfh":
        return gen_sfh(spec.n, spec.m, spec.k, spec.mu, spec.seed)
    if spec.model == "wsh":
        return gen_wsh(spec.n, spec.d, spec.k, spec.p_rewire, spec.seed)
    if spec.model in {"null-er", "null-cl", "null-cl-uniform"}:
        if spec.ref is None:
            raise DataError("null models need a reference hypergraph")
        return sample_null(spec.ref, spec.model.removeprefix("null-"), spec.seed,
                           k=spec.k or None)
    raise DataError(f"unknown generator model {spec.model!r}")

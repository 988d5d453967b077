"""Spectral summaries of supersymmetric tensors.

Two summaries are produced: the singular values of any mode unfolding
(identical across modes for supersymmetric tensors), computed by streaming
a Gram matrix over the sparse entries so the n x n^{k-1} unfolding is never
materialized; and a found-set of real H-eigenvalues from multi-start damped
Newton iteration. The Newton solver makes no completeness claim -- it is a
desk-scale surrogate for homotopy continuation -- but every reported value
carries a verified residual, and the analytically known eigenpairs of
Laplacian tensors (the all-ones vector and the standard basis vectors of
uniform hypergraphs) are always seeded and therefore always found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DataError
from .tensor import SymTensor, permutation_count

POSITIVITY_TOL = 1e-8


@dataclass(frozen=True)
class SpectralSummary:
    """Ascending spectral values plus, for H-eigen summaries, certificates.

    For kind ``h-eigen``, ``residuals[i]`` bounds the infinity norm of
    T x^{k-1} - lambda x^{[k-1]} at the reported eigenvector ``vectors[i]``
    (normalized to unit infinity norm), and the positivity flags record
    whether any certified eigenvector for that eigenvalue was strictly
    positive / non-negative.
    """

    kind: str
    values: np.ndarray
    residuals: Optional[np.ndarray] = None
    vectors: Optional[tuple[np.ndarray, ...]] = None
    has_positive_vector: Optional[np.ndarray] = None
    has_nonnegative_vector: Optional[np.ndarray] = None


def hosvd_singular_values(T: SymTensor) -> SpectralSummary:
    """Mode-1 unfolding singular values via a streamed Gram matrix.

    Columns of the unfolding are grouped by the multiset of their k-1 tail
    indices; each group contributes its ordering count times the outer
    product of the column values, giving G = U U^T in O(n^2 + nnz) memory.
    """
    n = T.dim
    tails: dict[tuple[int, ...], dict[int, float]] = {}
    for t, v in T.entries.items():
        for a in set(t):
            rest = list(t)
            rest.remove(a)
            tails.setdefault(tuple(rest), {})[a] = v

    G = np.zeros((n, n))
    for tail, heads in tails.items():
        idx = np.fromiter(heads.keys(), dtype=np.intp, count=len(heads))
        vals = np.fromiter(heads.values(), dtype=float, count=len(heads))
        G[np.ix_(idx, idx)] += permutation_count(tail) * np.outer(vals, vals)

    w = np.linalg.eigvalsh(G)
    # the Gram route cannot resolve singular values below sqrt(eps * ||G||);
    # eigenvalues inside the solver's backward-error floor are exact zeros
    floor = 16.0 * n * np.finfo(float).eps * max(float(np.abs(w).max(initial=0.0)), 1e-300)
    w = np.where(w < floor, 0.0, w)
    return SpectralSummary(kind="hosvd-singular", values=np.sqrt(w))


@dataclass(frozen=True)
class HEigenConfig:
    """Knobs of the desk-scale H-eigenvalue search."""

    n_max: int = 12
    k_max: int = 4
    starts: int = 500
    seed: int = 0
    max_iter: int = 60
    residual_tol: float = 1e-8
    dedup_tol: float = 1e-6


def _residual(T: SymTensor, x: np.ndarray, lam: float) -> float:
    k = T.order
    return float(np.abs(T.apply(x) - lam * x ** (k - 1)).max())


def _lambda_estimate(T: SymTensor, x: np.ndarray) -> float:
    k = T.order
    xe = x ** (k - 1)
    denom = float(xe @ xe)
    if denom == 0.0:
        return 0.0
    return float((T.apply(x) @ xe) / denom)


def _gershgorin_bound(T: SymTensor) -> float:
    """|lambda| <= max_i sum_j2..jk |T_{i,j2..jk}|, evaluated at argmax |x_i|."""
    rowsum = np.zeros(T.dim)
    for t, v in T.entries.items():
        for a in set(t):
            rest = list(t)
            rest.remove(a)
            rowsum[a] += abs(v) * permutation_count(tuple(rest))
    return float(rowsum.max(initial=0.0))


def _newton_solve(T: SymTensor, x0: np.ndarray, cfg: HEigenConfig, lam0: float | None = None):
    """Damped Newton on T x^{k-1} - lambda x^{[k-1]} = 0 with one anchored entry.

    Returns (x, lambda, residual) or None if the start fails to converge.
    """
    k, n = T.order, T.dim
    anchor = int(np.argmax(np.abs(x0)))
    if x0[anchor] == 0.0:
        return None
    x = x0 / x0[anchor]
    lam = _lambda_estimate(T, x) if lam0 is None else lam0

    def system(x, lam):
        return T.apply(x) - lam * x ** (k - 1)

    F = system(x, lam)
    fnorm = np.linalg.norm(F)
    for _ in range(cfg.max_iter):
        if fnorm <= 1e-13:
            break
        Jx = (k - 1) * T.apply_partial(x) - lam * (k - 1) * np.diag(x ** (k - 2))
        J = np.zeros((n + 1, n + 1))
        J[:n, :n] = Jx
        J[:n, n] = -(x ** (k - 1))
        J[n, anchor] = 1.0
        rhs = np.zeros(n + 1)
        rhs[:n] = -F
        rhs[n] = -(x[anchor] - 1.0)
        try:
            step = np.linalg.solve(J, rhs)
        except np.linalg.LinAlgError:
            return None
        # backtracking keeps the iteration from overshooting
        t = 1.0
        while t > 1e-6:
            x_new = x + t * step[:n]
            lam_new = lam + t * step[n]
            F_new = system(x_new, lam_new)
            fn_new = np.linalg.norm(F_new)
            if fn_new < fnorm * (1.0 - 1e-4 * t) or fn_new <= 1e-13:
                break
            t *= 0.5
        else:
            return None
        x, lam, F, fnorm = x_new, lam_new, F_new, fn_new
    else:
        if fnorm > 1e-13:
            return None

    top = x[np.argmax(np.abs(x))]
    if top == 0.0 or not np.all(np.isfinite(x)) or not np.isfinite(lam):
        return None
    x = x / top
    lam = _lambda_estimate(T, x)
    res = _residual(T, x, lam)
    if res > cfg.residual_tol:
        return None
    return x, lam, res


def h_eigenvalues_desk(T: SymTensor, config: HEigenConfig | None = None) -> SpectralSummary:
    """Deduplicated real H-eigenvalues found by multi-start damped Newton.

    Starts are the all-ones vector, every standard basis vector, and
    ``config.starts`` seeded Gaussian vectors; non-converging starts are
    dropped. Found-set semantics: values can be missing, never wrong.
    """
    cfg = config or HEigenConfig()
    if T.dim > cfg.n_max or T.order > cfg.k_max:
        raise DataError(
            f"H-eigenvalue search limited to n <= {cfg.n_max}, k <= {cfg.k_max}"
            f" (got n={T.dim}, k={T.order})")
    n = T.dim
    rng = np.random.default_rng(cfg.seed)
    bound = _gershgorin_bound(T)

    starts: list[tuple[np.ndarray, float | None]] = [(np.ones(n), None)]
    starts.extend((np.eye(n)[j], None) for j in range(n))
    for i in range(cfg.starts):
        x0 = rng.standard_normal(n)
        # the least-squares eigenvalue guess of a random vector concentrates
        # mid-spectrum; spreading half the starts over the admissible
        # eigenvalue range keeps the extreme eigenvalues reachable
        lam0 = float(rng.uniform(-bound, bound)) if i % 2 else None
        starts.append((x0, lam0))

    finds = []
    for x0, lam0 in starts:
        # a seed that is already an eigenvector is certified without iterating
        xs = x0 / np.abs(x0).max()
        lam_seed = _lambda_estimate(T, xs)
        res0 = _residual(T, xs, lam_seed)
        if res0 <= min(cfg.residual_tol, 1e-12):
            finds.append((xs, lam_seed, res0))
            continue
        out = _newton_solve(T, x0, cfg, lam0)
        if out is not None:
            finds.append(out)

    if not finds:
        return SpectralSummary(kind="h-eigen", values=np.empty(0),
                               residuals=np.empty(0), vectors=(),
                               has_positive_vector=np.empty(0, dtype=bool),
                               has_nonnegative_vector=np.empty(0, dtype=bool))

    finds.sort(key=lambda f: f[1])
    groups: list[list] = [[finds[0]]]
    for f in finds[1:]:
        if abs(f[1] - groups[-1][-1][1]) <= cfg.dedup_tol:
            groups[-1].append(f)
        else:
            groups.append([f])

    values, residuals, vectors, pos, nonneg = [], [], [], [], []
    for grp in groups:
        best = min(grp, key=lambda f: f[2])
        values.append(best[1])
        residuals.append(best[2])
        vectors.append(best[0])
        pos.append(any(np.min(f[0]) > POSITIVITY_TOL for f in grp))
        nonneg.append(any(np.min(f[0]) > -POSITIVITY_TOL for f in grp))

    return SpectralSummary(
        kind="h-eigen",
        values=np.array(values),
        residuals=np.array(residuals),
        vectors=tuple(vectors),
        has_positive_vector=np.array(pos, dtype=bool),
        has_nonnegative_vector=np.array(nonneg, dtype=bool),
    )

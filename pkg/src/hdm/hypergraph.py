"""Hypergraph data model, incidence matrices, and file I/O.

A hypergraph is a vertex count ``n`` plus a list of weighted hyperedges,
each a duplicate-free set of vertex ids in ``[0, n)``. Vertex ids are dense
integers; an optional label list is carried for display only.

Two text formats are supported:

* HGF: ``hgf 1`` / ``nodes <N>`` / ``edge <w> <v1> ... <vk>`` lines,
  ``#`` comments, LF endings.
* Incidence CSV: header-free 0/1 matrix (rows = vertices, columns =
  hyperedges) with an optional leading ``#weights,<w1>,...`` row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DataError

Edge = tuple[tuple[int, ...], float]


def _canonical_edge(vertices: Iterable[int]) -> tuple[int, ...]:
    vs = tuple(sorted(vertices))
    if len(vs) == 0:
        raise DataError("empty hyperedge")
    if len(set(vs)) != len(vs):
        raise DataError(f"repeated vertex within hyperedge {vs}")
    return vs


@dataclass(frozen=True)
class Hypergraph:
    """Immutable weighted hypergraph on vertices ``0..n-1``.

    ``edges`` holds ``(sorted vertex tuple, weight)`` pairs in insertion
    order; use :meth:`canonical` for an order-independent form.
    """

    n: int
    edges: tuple[Edge, ...]
    labels: Optional[tuple[str, ...]] = None

    def __init__(self, n: int, edges: Iterable[tuple[Iterable[int], float]] = (),
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise DataError(f"vertex count must be non-negative, got {n}")
        canon: list[Edge] = []
        seen: set[tuple[int, ...]] = set()
        for vertices, weight in edges:
            vs = _canonical_edge(vertices)
            if vs[0] < 0 or vs[-1] >= n:
                raise DataError(f"vertex id out of range [0, {n}) in edge {vs}")
            w = float(weight)
            if not (w > 0.0) or not np.isfinite(w):
                raise DataError(f"edge weight must be positive and finite, got {weight}")
            if vs in seen:
                raise DataError(f"duplicate hyperedge {vs}")
            seen.add(vs)
            canon.append((vs, w))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise DataError("label count does not match vertex count")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_cardinality(self) -> int:
        """Largest hyperedge cardinality; 0 for an edgeless hypergraph."""
        return max((len(vs) for vs, _ in self.edges), default=0)

    def edge_sets(self) -> set[tuple[int, ...]]:
        return {vs for vs, _ in self.edges}

    def vertex_degrees(self) -> np.ndarray:
        """Weighted degrees d(v) = sum of w(e) over edges containing v."""
        d = np.zeros(self.n)
        for vs, w in self.edges:
            for v in vs:
                d[v] += w
        return d

    def structural_degrees(self) -> np.ndarray:
        """Unweighted degrees: number of edges containing each vertex."""
        d = np.zeros(self.n, dtype=np.int64)
        for vs, _ in self.edges:
            for v in vs:
                d[v] += 1
        return d

    def is_uniform(self) -> bool:
        cards = {len(vs) for vs, _ in self.edges}
        return len(cards) <= 1

    def canonical(self) -> "Hypergraph":
        """Same hypergraph with edges sorted lexicographically by vertex tuple."""
        return Hypergraph(self.n, sorted(self.edges), labels=self.labels)

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Apply the vertex permutation ``perm`` (old id -> new id)."""
        if sorted(perm) != list(range(self.n)):
            raise DataError("relabeling must be a permutation of 0..n-1")
        edges = [(tuple(perm[v] for v in vs), w) for vs, w in self.edges]
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for old, new in enumerate(perm):
                labels[new] = self.labels[old]
        return Hypergraph(self.n, edges, labels=labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and dict(self.edges) == dict(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m}, k_max={self.max_cardinality})"


@dataclass(frozen=True)
class IncidenceView:
    """Incidence matrix H with the diagonal weight/degree vectors.

    ``H[v, e] = 1`` iff vertex v belongs to edge e. ``vertex_degrees`` are
    weighted (sum of w(e) over incident edges); ``edge_degrees`` are
    cardinalities.
    """

    H: np.ndarray
    weights: np.ndarray
    vertex_degrees: np.ndarray
    edge_degrees: np.ndarray

    @property
    def W(self) -> np.ndarray:
        return np.diag(self.weights)

    @property
    def Dv(self) -> np.ndarray:
        return np.diag(self.vertex_degrees)

    @property
    def De(self) -> np.ndarray:
        return np.diag(self.edge_degrees)


def incidence(g: Hypergraph) -> IncidenceView:
    """Build the n x m incidence view of ``g`` (edge order preserved)."""
    H = np.zeros((g.n, g.m))
    weights = np.zeros(g.m)
    for j, (vs, w) in enumerate(g.edges):
        H[list(vs), j] = 1.0
        weights[j] = w
    vertex_degrees = H @ weights
    edge_degrees = H.sum(axis=0)
    return IncidenceView(H=H, weights=weights,
                         vertex_degrees=vertex_degrees, edge_degrees=edge_degrees)


# ---------------------------------------------------------------------------
# HGF text format


def parse_hgf(text: str | bytes, merge_duplicates: bool = False) -> Hypergraph:
    """Parse HGF text into a validated Hypergraph.

    Duplicate edge sets are an error unless ``merge_duplicates`` is set, in
    which case their weights are summed.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [ln for ln in text.split("\n")
             if ln.strip() != "" and not ln.lstrip().startswith("#")]
    if len(lines) < 2:
        raise DataError("HGF input too short: need 'hgf 1' and 'nodes <N>' lines")
    if lines[0].split() != ["hgf", "1"]:
        raise DataError(f"bad HGF header line: {lines[0]!r}")
    head = lines[1].split()
    if len(head) != 2 or head[0] != "nodes":
        raise DataError(f"bad HGF nodes line: {lines[1]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise DataError(f"bad vertex count: {head[1]!r}") from None

    edges: dict[tuple[int, ...], float] = {}
    for ln in lines[2:]:
        toks = ln.split()
        if toks[0] != "edge" or len(toks) < 3:
            raise DataError(f"malformed HGF line: {ln!r}")
        try:
            w = float(toks[1])
            vs = [int(t) for t in toks[2:]]
        except ValueError:
            raise DataError(f"malformed HGF line: {ln!r}") from None
        key = _canonical_edge(vs)
        if key in edges:
            if not merge_duplicates:
                raise DataError(f"duplicate hyperedge {key} (use merge-duplicates to sum weights)")
            edges[key] += w
        else:
            edges[key] = w
    return Hypergraph(n, list(edges.items()))


def write_hgf(g: Hypergraph) -> str:
    """Serialize to canonical HGF: edges sorted by vertex tuple, 17-digit weights."""
    out = ["hgf 1", f"nodes {g.n}"]
    for vs, w in sorted(g.edges):
        out.append("edge " + f"{w:.17g}" + " " + " ".join(str(v) for v in vs))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Incidence CSV


def parse_incidence_csv(text: str | bytes) -> Hypergraph:
    """Parse a 0/1 incidence CSV (rows = vertices, columns = hyperedges).

    An optional first row ``#weights,<w1>,...,<wm>`` assigns edge weights;
    otherwise all weights are 1. Column order is preserved so that
    ``incidence(parse_incidence_csv(x)).H`` reproduces the input matrix.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = [ln.strip() for ln in text.split("\n") if ln.strip() != ""]
    weights = None
    if rows and rows[0].startswith("#weights"):
        toks = rows[0].split(",")
        try:
            weights = [float(t) for t in toks[1:]]
        except ValueError:
            raise DataError(f"bad weights row: {rows[0]!r}") from None
        rows = rows[1:]
    if not rows:
        raise DataError("incidence CSV has no matrix rows")

    matrix = []
    for ln in rows:
        vals = []
        for t in ln.split(","):
            t = t.strip()
            if t not in ("0", "1"):
                raise DataError(f"non-binary incidence entry {t!r}")
            vals.append(int(t))
        matrix.append(vals)
    m = len(matrix[0])
    if any(len(r) != m for r in matrix):
        raise DataError("ragged incidence CSV")
    H = np.array(matrix)
    n = H.shape[0]
    if weights is None:
        weights = [1.0] * m
    if len(weights) != m:
        raise DataError("weights row length does not match column count")

    edges = []
    for j in range(m):
        members = np.flatnonzero(H[:, j])
        if members.size == 0:
            raise DataError(f"all-zero incidence column {j}")
        edges.append((members.tolist(), weights[j]))
    return Hypergraph(n, edges)

"""Hypergraph descriptive statistics and multi-correlation ingestion.

Path lengths and clustering follow the section-graph convention: two
vertices are adjacent iff they share a hyperedge. The clustering of vertex
j counts the maximum-cardinality hyperedges falling inside its neighbor
set, normalized by the binomial count of possible ones; vertices with
fewer than k neighbors get 0.

Time series arrive as a T x s matrix (rows = samples). The
multi-correlation of a signal triple is sqrt(1 - det R) for the 3 x 3
Pearson correlation matrix R; thresholding it over all triples builds a
3-uniform hypergraph with the correlation as edge weight.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DataError
from .hypergraph import Hypergraph

DEFAULT_CORRELATION_THRESHOLD = 0.93


@dataclass(frozen=True)
class HyperStats:
    n: int
    m: int
    k_max: int
    degree_histogram: dict[int, int]
    avg_path_length: float
    unreachable_fraction: float
    connected: bool
    clustering: np.ndarray
    mean_clustering: float


def _neighbor_sets(g: Hypergraph) -> list[set[int]]:
    nbrs: list[set[int]] = [set() for _ in range(g.n)]
    for vs, _ in g.edges:
        for v in vs:
            nbrs[v].update(vs)
    for v in range(g.n):
        nbrs[v].discard(v)
    return nbrs


def _bfs_distances(nbrs: list[set[int]], source: int) -> np.ndarray:
    dist = np.full(len(nbrs), -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def hyper_stats(g: Hypergraph) -> HyperStats:
    """Degree histogram, average shortest path, and clustering coefficients.

    A disconnected hypergraph is flagged; the path-length average then runs
    over reachable ordered pairs only and the unreachable fraction is
    reported alongside.
    """
    nbrs = _neighbor_sets(g)
    k = g.max_cardinality

    degrees = g.structural_degrees()
    histogram: dict[int, int] = {}
    for d in degrees.tolist():
        histogram[d] = histogram.get(d, 0) + 1

    total_dist = 0
    reachable = 0
    for v in range(g.n):
        dist = _bfs_distances(nbrs, v)
        hit = dist > 0
        reachable += int(hit.sum())
        total_dist += int(dist[hit].sum())
    ordered_pairs = g.n * (g.n - 1)
    avg_path = total_dist / reachable if reachable else 0.0
    unreachable = 1.0 - reachable / ordered_pairs if ordered_pairs else 0.0

    clustering = np.zeros(g.n)
    if k >= 1:
        top_edges = [set(vs) for vs, _ in g.edges if len(vs) == k]
        for v in range(g.n):
            if len(nbrs[v]) < k:
                continue
            inside = sum(1 for e in top_edges if e <= nbrs[v])
            clustering[v] = inside / math.comb(len(nbrs[v]), k)

    return HyperStats(
        n=g.n, m=g.m, k_max=k,
        degree_histogram=histogram,
        avg_path_length=avg_path,
        unreachable_fraction=unreachable,
        connected=(unreachable == 0.0 and g.n > 0),
        clustering=clustering,
        mean_clustering=float(clustering.mean()) if g.n else 0.0,
    )


# ---------------------------------------------------------------------------
# time series


@dataclass(frozen=True)
class TimeSeriesMatrix:
    """T x s matrix of signal samples with optional signal labels."""

    values: np.ndarray
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2:
            raise DataError("time series must be a 2-d samples x signals matrix")
        if v.shape[0] < 3:
            raise DataError(f"need at least 3 time samples, got {v.shape[0]}")
        object.__setattr__(self, "values", v)
        if self.labels is not None and len(self.labels) != v.shape[1]:
            raise DataError("label count does not match signal count")

    @property
    def n_signals(self) -> int:
        return self.values.shape[1]


def parse_timeseries_csv(text: str | bytes) -> TimeSeriesMatrix:
    """Rows of comma-separated reals; optional leading ``#labels,...`` row."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = [ln.strip() for ln in text.split("\n") if ln.strip() != ""]
    labels = None
    if rows and rows[0].startswith("#labels"):
        labels = tuple(t.strip() for t in rows[0].split(",")[1:])
        rows = rows[1:]
    data = []
    for ln in rows:
        try:
            data.append([float(t) for t in ln.split(",")])
        except ValueError:
            raise DataError(f"bad time-series row: {ln!r}") from None
    if not data or any(len(r) != len(data[0]) for r in data):
        raise DataError("time-series CSV must be rectangular and nonempty")
    return TimeSeriesMatrix(np.array(data), labels=labels)


def multicorrelation(ts: TimeSeriesMatrix, triple: Sequence[int]) -> float:
    """sqrt(1 - det R) for the Pearson correlation matrix of three signals.

    0 means mutual independence, 1 means the signals are linearly
    dependent. The determinant is clamped to [0, 1] against roundoff.
    """
    i, j, l = triple
    if len({i, j, l}) != 3:
        raise DataError(f"signal indices must be distinct, got {triple}")
    cols = ts.values[:, [i, j, l]]
    if np.any(cols.std(axis=0) == 0.0):
        raise DataError(f"constant signal in triple {tuple(triple)}")
    R = np.corrcoef(cols, rowvar=False)
    det = min(max(float(np.linalg.det(R)), 0.0), 1.0)
    return math.sqrt(1.0 - det)


def timeseries_to_hypergraph(ts: TimeSeriesMatrix,
                             threshold: float = DEFAULT_CORRELATION_THRESHOLD) -> Hypergraph:
    """3-uniform hypergraph over the signals: one weighted hyperedge per
    triple whose multi-correlation exceeds the threshold."""
    s = ts.n_signals
    if s < 3:
        raise DataError(f"need at least 3 signals, got {s}")
    edges = []
    for i in range(s):
        for j in range(i + 1, s):
            for l in range(j + 1, s):
                rho = multicorrelation(ts, (i, j, l))
                if rho > threshold:
                    edges.append(((i, j, l), rho))
    return Hypergraph(s, edges, labels=ts.labels)

"""Dissimilarity measures between expanded graphs with known node correspondence.

Every measure takes two :class:`~hdm.expansion.ExpandedGraph` objects with
equal vertex counts plus a :class:`GdmParams` and returns a non-negative
float. Spectral measures use the normalized Laplacian (or the expansion's
projected Laplacian when one is attached); the spanning-tree measure uses
the combinatorial Laplacian, where Kirchhoff's theorem gives the tree count.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import DataError, NumericalError
from .expansion import ExpandedGraph, LaplacianMatrix, normalized_laplacian

DENSITY_RANGE = (-0.5, 2.5)
DENSITY_GRID_POINTS = 4096
DEFAULT_TAU_SET = (0.5, 1.5, 2.5, 5.0, 10.0)
SPECTRUM_BOUND_TOL = 1e-8


def _default_netlsd_grid() -> tuple[float, ...]:
    return tuple(np.logspace(-2.0, 2.0, 256))


@dataclass(frozen=True)
class GdmParams:
    """Tunable knobs shared by the measure catalog.

    p: exponent of the spectral l_p measure; sigma: Gaussian bandwidth of
    the spectral-density measure; tau_set: heat-wavelet scales;
    netlsd_grid: heat-trace sampling times; eps: belief-propagation
    epsilon, ``"auto"`` meaning 1/(1+max degree) per graph.
    """

    p: float = 2.0
    sigma: float = 0.015
    tau_set: tuple[float, ...] = DEFAULT_TAU_SET
    netlsd_grid: tuple[float, ...] = field(default_factory=_default_netlsd_grid)
    eps: float | str = "auto"
    netlsd_normalize: bool = False

    def __post_init__(self):
        if not self.p > 0:
            raise DataError("p must be positive")
        if not self.sigma > 0:
            raise DataError("sigma must be positive")
        taus = tuple(float(t) for t in self.tau_set)
        if len(taus) == 0 or any(t <= 0 for t in taus) or list(taus) != sorted(taus):
            raise DataError("tau_set must be non-empty, positive, sorted")
        object.__setattr__(self, "tau_set", taus)
        grid = tuple(float(t) for t in self.netlsd_grid)
        if len(grid) == 0 or any(t <= 0 for t in grid):
            raise DataError("netlsd_grid must be non-empty and positive")
        object.__setattr__(self, "netlsd_grid", grid)
        if self.eps != "auto" and not float(self.eps) > 0:
            raise DataError("eps must be positive or 'auto'")


def _check_pair(G: ExpandedGraph, Gt: ExpandedGraph, min_n: int = 0) -> int:
    if G.n != Gt.n:
        raise DataError(f"graph size mismatch: {G.n} vs {Gt.n}")
    if G.n < min_n:
        raise DataError(f"measure needs at least {min_n} vertices, got {G.n}")
    return G.n


def get_normalized_laplacian(G: ExpandedGraph) -> LaplacianMatrix:
    """The expansion's attached Laplacian if present, else I - D^-1/2 A D^-1/2."""
    if G.laplacian is not None and G.laplacian.kind in ("normalized", "projected-star"):
        return G.laplacian
    return normalized_laplacian(G)


def _laplacian_spectrum(G: ExpandedGraph) -> np.ndarray:
    lap = get_normalized_laplacian(G)
    w = np.linalg.eigvalsh(lap.M)
    if w[0] < -SPECTRUM_BOUND_TOL or w[-1] > 2.0 + SPECTRUM_BOUND_TOL:
        raise NumericalError(f"normalized Laplacian spectrum escapes [0, 2]: [{w[0]}, {w[-1]}]")
    return w


def is_connected(A: np.ndarray) -> bool:
    """Connectivity of the graph given by the nonzero pattern of A."""
    n = A.shape[0]
    if n == 0:
        return True
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in np.flatnonzero(A[u]):
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return bool(seen.all())


def eigenvector_centrality(G: ExpandedGraph) -> np.ndarray:
    """l1-normalized Perron vector of the adjacency matrix.

    Requires a connected graph with at least one edge so the Perron vector
    is unique and strictly positive.
    """
    if G.n == 0 or not np.any(G.A):
        raise DataError("eigenvector centrality undefined for an empty graph")
    if not is_connected(G.A):
        raise DataError("eigenvector centrality requires a connected graph")
    w, V = np.linalg.eigh(G.A)
    v = V[:, -1]
    v = np.abs(v)  # Perron vector of a connected non-negative matrix is positive
    return v / v.sum()


# ---------------------------------------------------------------------------
# measures


def gdm_hamming(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    n = _check_pair(G, Gt, min_n=2)
    return float(np.abs(G.A - Gt.A).sum() / (n * (n - 1)))


def gdm_jaccard(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    _check_pair(G, Gt)
    smin = np.minimum(G.A, Gt.A).sum()
    smax = np.maximum(G.A, Gt.A).sum()
    if smax == 0.0:
        return 0.0  # both graphs empty: identical
    return float(1.0 - smin / smax)


def gdm_centrality(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    n = _check_pair(G, Gt, min_n=1)
    c = eigenvector_centrality(G)
    ct = eigenvector_centrality(Gt)
    return float(np.abs(c - ct).sum() / n)


def gdm_spectral_lp(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    params = params or GdmParams()
    n = _check_pair(G, Gt, min_n=1)
    lam = _laplacian_spectrum(G)
    lamt = _laplacian_spectrum(Gt)
    return float(np.sum(np.abs(lam - lamt) ** params.p) / n)


def _log_tree_count(G: ExpandedGraph) -> float:
    # Kirchhoff: T = (1/n) * product of the n-1 nonzero combinatorial eigenvalues
    if not is_connected(G.A):
        raise DataError("spanning-tree measure requires a connected graph")
    L = np.diag(G.A.sum(axis=1)) - G.A
    w = np.linalg.eigvalsh(L)[1:]
    if np.any(w <= 0):
        raise NumericalError("non-positive Laplacian eigenvalue on a connected graph")
    return float(np.log(w).sum() - np.log(G.n))


def gdm_spanning_tree(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    _check_pair(G, Gt, min_n=1)
    return float(abs(_log_tree_count(G) - _log_tree_count(Gt)))


def gdm_spectral_density(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    params = params or GdmParams()
    n = _check_pair(G, Gt, min_n=1)
    lam = _laplacian_spectrum(G)
    lamt = _laplacian_spectrum(Gt)
    x = np.linspace(*DENSITY_RANGE, DENSITY_GRID_POINTS)
    norm = 1.0 / (np.sqrt(2.0 * np.pi) * params.sigma)

    def density(vals):
        z = (x[:, None] - vals[None, :]) / params.sigma
        return norm * np.exp(-0.5 * z * z).mean(axis=1)

    return float(np.trapezoid(np.abs(density(lam) - density(lamt)), x))


def _fabp_matrix(G: ExpandedGraph, eps: float | str) -> np.ndarray:
    deg = G.A.sum(axis=1)
    e = 1.0 / (1.0 + deg.max(initial=0.0)) if eps == "auto" else float(eps)
    M = np.eye(G.n) + e * e * np.diag(deg) - e * G.A
    try:
        S = np.linalg.inv(M)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"singular belief-propagation system (eps={e})") from exc
    return np.clip(S, 0.0, None)


def gdm_deltacon(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    params = params or GdmParams()
    _check_pair(G, Gt)
    S = _fabp_matrix(G, params.eps)
    St = _fabp_matrix(Gt, params.eps)
    return float(np.sqrt(((np.sqrt(S) - np.sqrt(St)) ** 2).sum()))


def _heat_signatures(G: ExpandedGraph, tau_set) -> np.ndarray:
    # column u stacks the wavelet coefficients of node u over all scales
    lap = get_normalized_laplacian(G)
    w, V = np.linalg.eigh(lap.M)
    return np.concatenate([(V * np.exp(-tau * w)) @ V.T for tau in tau_set], axis=0)


def gdm_heat_wavelet(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    params = params or GdmParams()
    n = _check_pair(G, Gt, min_n=1)
    xi = _heat_signatures(G, params.tau_set)
    xit = _heat_signatures(Gt, params.tau_set)
    return float(np.linalg.norm(xi - xit, axis=0).mean())


def heat_trace(G: ExpandedGraph, grid) -> np.ndarray:
    """h(tau) = sum_j exp(-lambda_j tau) over the sampling grid."""
    lap = get_normalized_laplacian(G)
    w = np.linalg.eigvalsh(lap.M)
    taus = np.asarray(grid, dtype=float)
    return np.exp(-np.outer(taus, w)).sum(axis=1)


def gdm_netlsd(G: ExpandedGraph, Gt: ExpandedGraph, params: GdmParams | None = None) -> float:
    params = params or GdmParams()
    if not params.netlsd_normalize:
        _check_pair(G, Gt)
    h = heat_trace(G, params.netlsd_grid)
    ht = heat_trace(Gt, params.netlsd_grid)
    if params.netlsd_normalize:
        h = h / G.n
        ht = ht / Gt.n
    return float(np.abs(h - ht).max())


GDM_MEASURES = {
    "hamming": gdm_hamming,
    "jaccard": gdm_jaccard,
    "centrality": gdm_centrality,
    "spectral": gdm_spectral_lp,
    "spanning-tree": gdm_spanning_tree,
    "density": gdm_spectral_density,
    "deltacon": gdm_deltacon,
    "heat-wavelet": gdm_heat_wavelet,
    "netlsd": gdm_netlsd,
}

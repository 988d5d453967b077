"""Tensor-based dissimilarity measures between hypergraphs.

All measures require equal vertex counts. The tensor measures also require
equal maximum hyperedge cardinality, except that an edgeless hypergraph is
comparable to anything (its tensors are zero at any order). Entrywise sums
run over canonical entries weighted by their permutation multiplicity, so
the full n^k support is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .centrality import CentralityConfig, nsm_centrality
from .errors import DataError, NumericalError
from .hypergraph import Hypergraph
from .tensor import SymTensor, adjacency_tensor, laplacian_tensor, permutation_count
from .tensor_spectra import HEigenConfig, h_eigenvalues_desk, hosvd_singular_values


@dataclass(frozen=True)
class DirectHdmParams:
    p: float = 2.0
    heigen: HEigenConfig = field(default_factory=HEigenConfig)
    centrality: CentralityConfig = field(default_factory=CentralityConfig)

    def __post_init__(self):
        if not self.p > 0:
            raise DataError("p must be positive")


def _common_order(g: Hypergraph, gt: Hypergraph) -> Optional[int]:
    """Tensor order both hypergraphs are represented at; None if both edgeless."""
    if g.n != gt.n:
        raise DataError(f"vertex count mismatch: {g.n} vs {gt.n}")
    k1, k2 = g.max_cardinality, gt.max_cardinality
    if g.m > 0 and gt.m > 0 and k1 != k2:
        raise DataError(f"max hyperedge cardinality mismatch: {k1} vs {k2}")
    k = max(k1, k2)
    if k == 0:
        return None
    return max(k, 2)


def _entrywise_sum(A: SymTensor, At: SymTensor, fn) -> float:
    total = 0.0
    for key in A.entries.keys() | At.entries.keys():
        total += permutation_count(key) * fn(A.entries.get(key, 0.0), At.entries.get(key, 0.0))
    return total


def dhdm_hamming(g: Hypergraph, gt: Hypergraph, params: DirectHdmParams | None = None) -> float:
    k = _common_order(g, gt)
    if k is None:
        return 0.0
    A = adjacency_tensor(g, k)
    At = adjacency_tensor(gt, k)
    return _entrywise_sum(A, At, lambda a, b: abs(a - b)) / (g.n ** k - g.n)


def dhdm_jaccard(g: Hypergraph, gt: Hypergraph, params: DirectHdmParams | None = None) -> float:
    k = _common_order(g, gt)
    if k is None:
        return 0.0  # both edgeless: identical
    A = adjacency_tensor(g, k)
    At = adjacency_tensor(gt, k)
    smin = _entrywise_sum(A, At, min)
    smax = _entrywise_sum(A, At, max)
    if smax == 0.0:
        return 0.0
    return 1.0 - smin / smax


def _padded_pairs(vals: np.ndarray, valst: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # extend the shorter ascending set with leading zeros
    q, qt = len(vals), len(valst)
    if q < qt:
        vals = np.concatenate([np.zeros(qt - q), vals])
    elif qt < q:
        valst = np.concatenate([np.zeros(q - qt), valst])
    return vals, valst


def dhdm_spectral_h(g: Hypergraph, gt: Hypergraph, params: DirectHdmParams | None = None) -> float:
    """l_p distance between the found H-eigenvalue sets of the Laplacian tensors.

    The found sets can have different sizes; the shorter ascending set is
    zero-padded at the front before pairing.
    """
    params = params or DirectHdmParams()
    k = _common_order(g, gt)
    if k is None:
        return 0.0
    s = h_eigenvalues_desk(laplacian_tensor(g, k), params.heigen)
    st = h_eigenvalues_desk(laplacian_tensor(gt, k), params.heigen)
    vals, valst = _padded_pairs(s.values, st.values)
    q = len(vals)
    if q == 0:
        return 0.0
    return float(np.sum(np.abs(vals - valst) ** params.p) / q)


def dhdm_spectral_s(g: Hypergraph, gt: Hypergraph, params: DirectHdmParams | None = None) -> float:
    """l_p distance between descending HOSVD singular values of the Laplacian tensors."""
    params = params or DirectHdmParams()
    k = _common_order(g, gt)
    if k is None:
        return 0.0
    gam = hosvd_singular_values(laplacian_tensor(g, k)).values[::-1]
    gamt = hosvd_singular_values(laplacian_tensor(gt, k)).values[::-1]
    return float(np.sum(np.abs(gam - gamt) ** params.p) / g.n)


def dhdm_centrality(g: Hypergraph, gt: Hypergraph, params: DirectHdmParams | None = None) -> float:
    """Mean absolute difference of the nonlinear node centrality vectors."""
    params = params or DirectHdmParams()
    if g.n != gt.n:
        raise DataError(f"vertex count mismatch: {g.n} vs {gt.n}")
    res = nsm_centrality(g, params.centrality)
    rest = nsm_centrality(gt, params.centrality)
    if not (res.converged and rest.converged):
        raise NumericalError("centrality power method did not converge")
    return float(np.abs(res.c - rest.c).sum() / g.n)


DIRECT_MEASURES = {
    "t-hamming": dhdm_hamming,
    "t-jaccard": dhdm_jaccard,
    "t-spectral-h": dhdm_spectral_h,
    "t-spectral-s": dhdm_spectral_s,
    "t-centrality": dhdm_centrality,
}

"""Clique and star expansions of hypergraphs into graph representations.

All constructions are dense and refuse vertex counts above ``MAX_DENSE_N``;
spectra downstream need dense eigensolves anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DataError
from .hypergraph import Hypergraph, incidence

MAX_DENSE_N = 4096


@dataclass(frozen=True)
class LaplacianMatrix:
    """Symmetric Laplacian with its construction kind.

    kinds: ``combinatorial`` (row sums 0), ``normalized`` (spectrum in
    [0, 2]), ``projected-star`` (spectrum in [0, 1]).
    """

    kind: str
    M: np.ndarray


@dataclass(frozen=True)
class ExpandedGraph:
    """Graph produced by an expansion: zero-diagonal adjacency + degrees.

    ``laplacian`` optionally carries the expansion's own normalized
    Laplacian (the projected star Laplacian); spectral measures prefer it
    over recomputing one from ``A``.
    """

    n: int
    A: np.ndarray
    d: np.ndarray
    laplacian: Optional[LaplacianMatrix] = None


def _check_dense_size(n: int) -> None:
    if n > MAX_DENSE_N:
        raise DataError(f"dense expansion refused for n={n} > {MAX_DENSE_N}")


def clique_expand_standard(g: Hypergraph) -> ExpandedGraph:
    """Standard clique expansion: A = H W H^T with the diagonal zeroed.

    Pair weights are summed hyperedge weights; the degree vector is
    d(u) = sum_e h(u,e) (|e|-1) w(e), which equals the row sums of A.
    """
    _check_dense_size(g.n)
    inc = incidence(g)
    A = inc.H @ np.diag(inc.weights) @ inc.H.T
    np.fill_diagonal(A, 0.0)
    d = inc.H @ ((inc.edge_degrees - 1.0) * inc.weights)
    return ExpandedGraph(n=g.n, A=A, d=d)


def clique_laplacian_bolla(g: Hypergraph) -> LaplacianMatrix:
    """Bolla-style clique Laplacian D_v - H D_e^{-1} H^T."""
    _check_dense_size(g.n)
    inc = incidence(g)
    M = np.diag(inc.vertex_degrees)
    if g.m > 0:
        M = M - inc.H @ np.diag(1.0 / inc.edge_degrees) @ inc.H.T
    return LaplacianMatrix(kind="combinatorial", M=M)


def _inv_sqrt_vector(d: np.ndarray) -> np.ndarray:
    # isolated vertices get 0 (their Laplacian row/column stays zero)
    out = np.zeros_like(d, dtype=float)
    pos = d > 0
    out[pos] = 1.0 / np.sqrt(d[pos])
    return out


def star_project(g: Hypergraph, variant: str = "zhou") -> tuple[np.ndarray, LaplacianMatrix]:
    """Star expansion projected back onto the vertex set.

    variant ``zhou``: star weights w*(u,e) = w(e), giving
    A_p = H W D_e^{-1} W H^T and L_p = I - D_v^{-1/2} H W D_e^{-1} H^T D_v^{-1/2}.
    variant ``standard``: star weights w*(u,e) = w(e)/|e|.

    Both return the projected adjacency (diagonal included) and the
    projected normalized Laplacian, whose spectrum lies in [0, 1].
    """
    _check_dense_size(g.n)
    inc = incidence(g)
    if variant == "zhou":
        Wstar = inc.H * inc.weights
    elif variant == "standard":
        Wstar = inc.H * (inc.weights / inc.edge_degrees) if g.m else inc.H.copy()
    else:
        raise DataError(f"unknown star variant {variant!r}")

    dstar_v = Wstar.sum(axis=1)
    dstar_e = Wstar.sum(axis=0)
    if g.m > 0:
        A_p = (Wstar / dstar_e) @ Wstar.T
    else:
        A_p = np.zeros((g.n, g.n))

    s = _inv_sqrt_vector(dstar_v)
    M = -(s[:, None] * A_p * s[None, :])
    np.fill_diagonal(M, np.diag(M) + np.where(dstar_v > 0, 1.0, 0.0))
    return A_p, LaplacianMatrix(kind="projected-star", M=M)


def normalized_laplacian(G: ExpandedGraph) -> LaplacianMatrix:
    """I - D^{-1/2} A D^{-1/2} with zero rows/columns for isolated vertices."""
    s = _inv_sqrt_vector(np.asarray(G.d, dtype=float))
    M = -(s[:, None] * G.A * s[None, :])
    np.fill_diagonal(M, np.diag(M) + np.where(np.asarray(G.d) > 0, 1.0, 0.0))
    return LaplacianMatrix(kind="normalized", M=M)


def star_expand(g: Hypergraph, variant: str = "zhou") -> ExpandedGraph:
    """Star route for indirect comparison: zero-diagonal projected adjacency
    with the projected Laplacian attached for spectral measures."""
    A_p, L_p = star_project(g, variant)
    A = A_p.copy()
    np.fill_diagonal(A, 0.0)
    return ExpandedGraph(n=g.n, A=A, d=A.sum(axis=1), laplacian=L_p)

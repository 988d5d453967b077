"""Sparse supersymmetric tensors for hypergraphs.

A :class:`SymTensor` stores one value per canonical (non-decreasing) index
tuple; the value at any permutation of a stored tuple is the same, making
the tensor supersymmetric by construction. The adjacency tensor of a
hypergraph places w(e)*s/alpha on every order-k tuple that uses all s
vertices of an edge at least once, which makes the slice sums along any
mode reproduce the weighted vertex degrees. The Laplacian tensor is the
super-diagonal degree tensor minus the adjacency tensor.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import DataError
from .hypergraph import Hypergraph

MAX_DENSE_ELEMENTS = 10 ** 8


def permutation_count(idx: tuple[int, ...]) -> int:
    """Number of distinct orderings of the multiset ``idx``."""
    c = math.factorial(len(idx))
    for reps in Counter(idx).values():
        c //= math.factorial(reps)
    return c


def alpha_coefficient(k: int, s: int) -> int:
    """Count of length-k tuples over s distinct symbols using each at least once."""
    if s < 1 or s > k:
        raise DataError(f"need 1 <= s <= k, got s={s}, k={k}")
    # inclusion-exclusion over excluded symbols; equals the multinomial sum
    total = 0
    for j in range(s + 1):
        total += (-1) ** j * math.comb(s, j) * (s - j) ** k
    return total


class SymTensor:
    """Order-k, dimension-n supersymmetric tensor with sparse canonical storage.

    Treat instances as immutable after construction.
    """

    def __init__(self, order: int, dim: int, entries: Mapping[tuple[int, ...], float] | None = None):
        if order < 2:
            raise DataError(f"tensor order must be >= 2, got {order}")
        if dim < 0:
            raise DataError(f"tensor dimension must be non-negative, got {dim}")
        self.order = int(order)
        self.dim = int(dim)
        self.entries: dict[tuple[int, ...], float] = {}
        for idx, v in (entries or {}).items():
            idx = tuple(idx)
            if len(idx) != order:
                raise DataError(f"index tuple {idx} has wrong length for order {order}")
            if list(idx) != sorted(idx):
                raise DataError(f"index tuple {idx} is not canonical (non-decreasing)")
            if idx[0] < 0 or idx[-1] >= dim:
                raise DataError(f"index out of range in {idx}")
            v = float(v)
            if not np.isfinite(v):
                raise DataError(f"non-finite tensor value at {idx}")
            if v != 0.0:
                self.entries[idx] = v
        self._apply_arrays = None
        self._partial_arrays = None

    def value(self, idx: Iterable[int]) -> float:
        """Tensor value at an arbitrary (not necessarily sorted) index tuple."""
        return self.entries.get(tuple(sorted(idx)), 0.0)

    def nnz_expanded(self) -> int:
        return sum(permutation_count(t) for t in self.entries)

    def norm1(self) -> float:
        """Entrywise 1-norm over the full permutation-expanded support."""
        return float(sum(abs(v) * permutation_count(t) for t, v in self.entries.items()))

    def to_dense(self) -> np.ndarray:
        if self.dim ** self.order > MAX_DENSE_ELEMENTS:
            raise DataError(f"dense tensor refused: {self.dim}^{self.order} elements")
        arr = np.zeros((self.dim,) * self.order)
        for t, v in self.entries.items():
            for p in set(permutations(t)):
                arr[p] = v
        return arr

    # -- contraction kernels ------------------------------------------------

    def _build_apply_arrays(self):
        rows, coefs, tails = [], [], []
        for t, v in self.entries.items():
            for a in set(t):
                rest = list(t)
                rest.remove(a)
                rows.append(a)
                coefs.append(v * permutation_count(tuple(rest)))
                tails.append(rest)
        k = self.order
        self._apply_arrays = (
            np.array(rows, dtype=np.intp),
            np.array(coefs, dtype=float),
            np.array(tails, dtype=np.intp).reshape(len(rows), k - 1),
        )

    def apply(self, x: np.ndarray) -> np.ndarray:
        """(T x^{k-1})_i = sum over the remaining k-1 modes contracted with x."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise DataError(f"vector length {x.shape} does not match dimension {self.dim}")
        if self._apply_arrays is None:
            self._build_apply_arrays()
        rows, coefs, tails = self._apply_arrays
        y = np.zeros(self.dim)
        if len(rows):
            np.add.at(y, rows, coefs * np.prod(x[tails], axis=1))
        return y

    def _build_partial_arrays(self):
        # arrays for the mode-(1,2) partial contraction used by Newton Jacobians
        rows, cols, coefs, rests = [], [], [], []
        for t, v in self.entries.items():
            for a in set(t):
                rem = list(t)
                rem.remove(a)
                for b in set(rem):
                    rest = list(rem)
                    rest.remove(b)
                    rows.append(a)
                    cols.append(b)
                    coefs.append(v * permutation_count(tuple(rest)))
                    rests.append(rest)
        k = self.order
        self._partial_arrays = (
            np.array(rows, dtype=np.intp),
            np.array(cols, dtype=np.intp),
            np.array(coefs, dtype=float),
            np.array(rests, dtype=np.intp).reshape(len(rows), max(k - 2, 0)),
        )

    def apply_partial(self, x: np.ndarray) -> np.ndarray:
        """Matrix M with M[i, j] = sum_{j3..jk} T[i, j, j3..jk] x_j3 ... x_jk.

        The gradient of ``apply`` is (k-1) * M.
        """
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise DataError(f"vector length {x.shape} does not match dimension {self.dim}")
        if self._partial_arrays is None:
            self._build_partial_arrays()
        rows, cols, coefs, rests = self._partial_arrays
        M = np.zeros((self.dim, self.dim))
        if len(rows):
            vals = coefs * np.prod(x[rests], axis=1) if rests.shape[1] else coefs
            np.add.at(M, (rows, cols), vals)
        return M


def tensor_apply(T: SymTensor, x: np.ndarray) -> np.ndarray:
    return T.apply(x)


def _resolve_order(g: Hypergraph, order: Optional[int]) -> int:
    k = g.max_cardinality if order is None else int(order)
    if k < 2:
        raise DataError(f"adjacency tensor needs order >= 2 (max cardinality {g.max_cardinality})")
    if order is not None and g.max_cardinality > k:
        raise DataError(f"hypergraph has cardinality {g.max_cardinality} > requested order {k}")
    return k


def adjacency_tensor(g: Hypergraph, order: Optional[int] = None) -> SymTensor:
    """Order-k adjacency tensor of ``g`` (k = max hyperedge cardinality).

    An explicit larger ``order`` embeds the hypergraph in a higher-order
    tensor, which keeps hypergraphs of different maximum cardinality
    comparable when the caller decides they should be.
    """
    k = _resolve_order(g, order)
    entries: dict[tuple[int, ...], float] = {}
    for vs, w in g.edges:
        s = len(vs)
        val = w * s / alpha_coefficient(k, s)
        full = set(vs)
        for t in combinations_with_replacement(sorted(vs), k):
            if set(t) == full:
                entries[t] = entries.get(t, 0.0) + val
    return SymTensor(k, g.n, entries)


def laplacian_tensor(g: Hypergraph, order: Optional[int] = None) -> SymTensor:
    """Laplacian tensor: super-diagonal degrees minus the adjacency tensor."""
    A = adjacency_tensor(g, order)
    k = A.order
    entries = {t: -v for t, v in A.entries.items()}
    for i, d in enumerate(g.vertex_degrees()):
        t = (i,) * k
        entries[t] = d + entries.get(t, 0.0)
    return SymTensor(k, g.n, entries)

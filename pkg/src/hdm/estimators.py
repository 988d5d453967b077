"""scikit-learn compatible front end.

:class:`PairwiseDissimilarity` turns a sequence of hypergraphs into a
square distance matrix, which plugs straight into estimators taking
``metric="precomputed"`` (t-SNE, spectral/agglomerative clustering, ...).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .compare import METHODS, make_measure
from .errors import DataError
from .evaluation import distance_matrix
from .graph_measures import GDM_MEASURES, GdmParams
from .hypergraph import Hypergraph
from .tensor_measures import DIRECT_MEASURES, DirectHdmParams


def check_hypergraph_sequence(X, require_equal_n: bool = True) -> list[Hypergraph]:
    """Validate a sequence of Hypergraph inputs for pairwise comparison."""
    items = list(X)
    if not items:
        raise DataError("need at least one hypergraph")
    for i, g in enumerate(items):
        if not isinstance(g, Hypergraph):
            raise DataError(f"item {i} is not a Hypergraph ({type(g).__name__})")
    if require_equal_n:
        sizes = {g.n for g in items}
        if len(sizes) > 1:
            raise DataError(f"hypergraphs must share a vertex count, got {sorted(sizes)}")
    return items


class PairwiseDissimilarity(BaseEstimator, TransformerMixin):
    """Transformer from hypergraph sequences to pairwise distance matrices.

    Parameters mirror the measure catalog: ``measure`` is a graph-measure
    token (with ``method`` ``"clique"`` or ``"star"``) or a ``t-*`` token
    (with ``method`` ``"tensor"``). The transform output is a dense
    symmetric (n_items, n_items) array.

    >>> erh = [gen_erh(12, 8, 3, seed=s) for s in range(4)]
    >>> D = PairwiseDissimilarity(measure="hamming").fit_transform(erh)
    """

    def __init__(self, measure: str = "hamming", method: str = "clique",
                 p: float = 2.0, sigma: float = 0.015, eps: float | str = "auto",
                 star_variant: str = "zhou", n_jobs: int = 1):
        self.measure = measure
        self.method = method
        self.p = p
        self.sigma = sigma
        self.eps = eps
        self.star_variant = star_variant
        self.n_jobs = n_jobs

    def _bound_measure(self):
        if self.method not in METHODS:
            raise DataError(f"unknown method {self.method!r}")
        known = DIRECT_MEASURES if self.method == "tensor" else GDM_MEASURES
        if self.measure not in known:
            raise DataError(f"unknown measure {self.measure!r} for method {self.method!r}")
        return make_measure(
            self.measure, self.method,
            gdm_params=GdmParams(p=self.p, sigma=self.sigma, eps=self.eps),
            direct_params=DirectHdmParams(p=self.p),
            star_variant=self.star_variant,
        )

    def fit(self, X, y=None):
        self._bound_measure()
        check_hypergraph_sequence(X)
        return self

    def transform(self, X, y=None) -> np.ndarray:
        items = check_hypergraph_sequence(X)
        dm = distance_matrix(items, self._bound_measure(),
                             measure_name=self.measure, n_jobs=self.n_jobs)
        return dm.D

    def fit_transform(self, X, y=None) -> np.ndarray:
        return self.fit(X).transform(X)

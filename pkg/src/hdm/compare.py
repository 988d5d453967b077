"""One entry point for hypergraph dissimilarity.

A comparison is a method (``clique``/``star`` expansion, or ``tensor`` for
the direct measures) plus a measure token. Expansion methods accept the
graph-measure tokens; the tensor method accepts the ``t-*`` tokens.
"""

from __future__ import annotations

from typing import Callable, Optional

from .errors import DataError
from .expansion import ExpandedGraph, clique_expand_standard, star_expand
from .graph_measures import GDM_MEASURES, GdmParams
from .hypergraph import Hypergraph
from .tensor_measures import DIRECT_MEASURES, DirectHdmParams

EXPANSION_METHODS = ("clique", "star")
METHODS = EXPANSION_METHODS + ("tensor",)


def expand(g: Hypergraph, method: str, star_variant: str = "zhou") -> ExpandedGraph:
    if method == "clique":
        return clique_expand_standard(g)
    if method == "star":
        return star_expand(g, variant=star_variant)
    raise DataError(f"unknown expansion method {method!r}")


def make_measure(measure: str, method: str = "clique",
                 gdm_params: Optional[GdmParams] = None,
                 direct_params: Optional[DirectHdmParams] = None,
                 star_variant: str = "zhou",
                 ) -> Callable[[Hypergraph, Hypergraph], float]:
    """Bind a measure token and method into a ``(g, g~) -> float`` callable."""
    if method in EXPANSION_METHODS:
        if measure not in GDM_MEASURES:
            raise DataError(f"unknown graph measure {measure!r} for method {method!r}")
        fn = GDM_MEASURES[measure]
        params = gdm_params or GdmParams()

        def indirect(g1: Hypergraph, g2: Hypergraph) -> float:
            return fn(expand(g1, method, star_variant), expand(g2, method, star_variant), params)

        return indirect
    if method == "tensor":
        if measure not in DIRECT_MEASURES:
            raise DataError(f"unknown tensor measure {measure!r}")
        fn = DIRECT_MEASURES[measure]
        params = direct_params or DirectHdmParams()

        def direct(g1: Hypergraph, g2: Hypergraph) -> float:
            return fn(g1, g2, params)

        return direct
    raise DataError(f"unknown method {method!r}")


def dissimilarity(g1: Hypergraph, g2: Hypergraph, measure: str, method: str = "clique",
                  **kwargs) -> float:
    return make_measure(measure, method, **kwargs)(g1, g2)

import math

import numpy as np
import pytest

from hdm import CentralityConfig, CentralityResult, Hypergraph, nsm_centrality
from hdm.errors import DataError
from hdm.graph_measures import eigenvector_centrality
from hdm import clique_expand_standard


def fixed_point_oracle(g, family="log-exp", p=2.0, tol=1e-12, iters=100000):
    """Independent loop-based coding of the alternating update."""
    n, m = g.n, g.m
    members = [vs for vs, _ in g.edges]
    weights = [w for _, w in g.edges]
    c = [1.0 / n] * n
    e = [1.0 / m] * m
    for _ in range(iters):
        c_new = [0.0] * n
        for j, vs in enumerate(members):
            for v in vs:
                c_new[v] += weights[j] * e[j]
        if family == "lp":
            c_new = [x ** (1.0 / (p + 1.0)) for x in c_new]
        s = sum(c_new)
        c_new = [x / s for x in c_new]
        if family == "linear":
            e_new = [sum(c_new[v] for v in vs) for vs in members]
        else:
            e_new = [math.log(sum(math.exp(c_new[v]) for v in vs)) for vs in members]
        s = sum(e_new)
        e_new = [x / s for x in e_new]
        delta = max(sum(abs(a - b) for a, b in zip(c_new, c)),
                    sum(abs(a - b) for a, b in zip(e_new, e)))
        c, e = c_new, e_new
        if delta <= tol:
            break
    return np.array(c), np.array(e)


def test_single_edge_is_uniform():
    res = nsm_centrality(Hypergraph(3, [((0, 1, 2), 1.0)]))
    assert np.allclose(res.c, 1.0 / 3.0)
    assert np.allclose(res.e, [1.0])
    assert res.converged


def test_two_disjoint_edges_uniform():
    res = nsm_centrality(Hypergraph(4, [((0, 1), 1.0), ((2, 3), 1.0)]))
    assert np.allclose(res.c, 0.25)
    assert np.allclose(res.e, 0.5)


def test_star_like_dominant_vertex_and_oracle():
    g = Hypergraph(5, [((0, 1, 2), 1.0), ((0, 3, 4), 1.0)])
    res = nsm_centrality(g, CentralityConfig(tol=1e-10))
    assert res.c[0] > res.c[1]
    assert np.allclose(res.c[1:], res.c[1], atol=1e-9)
    c_or, e_or = fixed_point_oracle(g)
    assert np.allclose(res.c, c_or, atol=1e-8)
    assert np.allclose(res.e, e_or, atol=1e-8)


@pytest.mark.parametrize("family", ["linear", "log-exp", "lp"])
def test_families_match_oracle(family):
    g = Hypergraph(6, [((0, 1, 2), 1.0), ((2, 3), 2.0), ((3, 4, 5), 0.5), ((0, 5), 1.0)])
    res = nsm_centrality(g, CentralityConfig(family=family, tol=1e-10))
    assert res.converged
    c_or, e_or = fixed_point_oracle(g, family=family)
    assert np.allclose(res.c, c_or, atol=1e-8)
    assert np.allclose(res.e, e_or, atol=1e-8)


def test_permutation_equivariance():
    g = Hypergraph(5, [((0, 1, 2), 1.0), ((2, 3, 4), 2.0), ((0, 4), 1.0)])
    perm = [3, 0, 4, 1, 2]
    base = nsm_centrality(g)
    moved = nsm_centrality(g.relabel(perm))
    for old in range(5):
        assert moved.c[perm[old]] == pytest.approx(base.c[old], abs=1e-10)


def test_converged_residuals_small():
    g = Hypergraph(5, [((0, 1, 2), 1.0), ((2, 3, 4), 2.0), ((0, 4), 1.0)])
    cfg = CentralityConfig(tol=1e-9)
    res = nsm_centrality(g, cfg)
    assert res.converged
    # re-apply one update: the renormalized images should sit within 10*tol
    from hdm.hypergraph import incidence
    inc = incidence(g)
    c_img = inc.H @ (inc.weights * res.e)
    c_img = c_img / c_img.sum()
    e_img = np.log(inc.H.T @ np.exp(c_img))
    e_img = e_img / e_img.sum()
    assert np.abs(c_img - res.c).sum() <= 10 * cfg.tol
    assert np.abs(e_img - res.e).sum() <= 10 * cfg.tol


def test_positivity_of_iterates():
    g = Hypergraph(4, [((0, 1), 1.0), ((1, 2, 3), 1.0)])
    res = nsm_centrality(g)
    assert np.all(res.c > 0)
    assert np.all(res.e > 0)
    assert res.c.sum() == pytest.approx(1.0)
    assert res.e.sum() == pytest.approx(1.0)


def test_linear_family_matches_eigenvector_centrality_on_regular_graphs():
    # exact correspondence holds for degree-regular graphs, where the
    # incidence Gram matrix A + d I shares the Perron vector with A
    cases = [
        Hypergraph(3, [((0, 1), 1.0), ((1, 2), 1.0), ((0, 2), 1.0)]),
        Hypergraph(4, [((0, 1), 1.0), ((1, 2), 1.0), ((2, 3), 1.0), ((0, 3), 1.0)]),
        Hypergraph(6, [((0, 1), 1.0), ((1, 2), 1.0), ((2, 3), 1.0),
                       ((3, 4), 1.0), ((4, 5), 1.0), ((0, 5), 1.0)]),
    ]
    for g in cases:
        res = nsm_centrality(g, CentralityConfig(family="linear", tol=1e-12, max_iter=50000))
        cg = eigenvector_centrality(clique_expand_standard(g))
        cos = float(res.c @ cg / (np.linalg.norm(res.c) * np.linalg.norm(cg)))
        assert 1.0 - cos <= 1e-6


def test_rejects_isolated_vertex_and_edgeless():
    with pytest.raises(DataError):
        nsm_centrality(Hypergraph(4, [((0, 1, 2), 1.0)]))
    with pytest.raises(DataError):
        nsm_centrality(Hypergraph(3, []))


def test_non_convergence_is_flagged_not_raised():
    g = Hypergraph(5, [((0, 1, 2), 1.0), ((2, 3, 4), 2.0), ((0, 4), 1.0)])
    res = nsm_centrality(g, CentralityConfig(tol=1e-15, max_iter=2))
    assert isinstance(res, CentralityResult)
    assert not res.converged


def test_config_validation():
    with pytest.raises(DataError):
        CentralityConfig(family="nope")
    with pytest.raises(DataError):
        CentralityConfig(tol=0.0)

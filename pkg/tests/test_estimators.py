import numpy as np
import pytest

from hdm import (PairwiseDissimilarity, dissimilarity, expand, gen_erh,
                 gen_sfh, make_measure)
from hdm.errors import DataError
from hdm.estimators import check_hypergraph_sequence

ITEMS = [gen_erh(10, 12, 3, seed=s) for s in range(3)] + \
        [gen_sfh(10, 12, 3, mu=0.5, seed=s) for s in range(3)]


def test_dissimilarity_dispatch_matches_manual_composition():
    from hdm.graph_measures import gdm_hamming
    a, b = ITEMS[0], ITEMS[1]
    got = dissimilarity(a, b, "hamming", "clique")
    want = gdm_hamming(expand(a, "clique"), expand(b, "clique"))
    assert got == want


def test_make_measure_rejects_bad_tokens():
    with pytest.raises(DataError):
        make_measure("t-hamming", "clique")
    with pytest.raises(DataError):
        make_measure("hamming", "tensor")
    with pytest.raises(DataError):
        make_measure("hamming", "line-graph")


def test_transformer_produces_distance_matrix():
    est = PairwiseDissimilarity(measure="hamming", method="clique")
    D = est.fit_transform(ITEMS)
    assert D.shape == (6, 6)
    assert np.allclose(D, D.T)
    assert np.all(np.diag(D) == 0)
    assert np.all(D >= 0)


def test_transformer_tensor_route():
    D = PairwiseDissimilarity(measure="t-hamming", method="tensor").fit_transform(ITEMS)
    assert D.shape == (6, 6)
    assert D[0, 1] == dissimilarity(ITEMS[0], ITEMS[1], "t-hamming", "tensor")


def test_get_params_round_trip():
    est = PairwiseDissimilarity(measure="spectral", method="star", p=3.0)
    params = est.get_params()
    assert params["measure"] == "spectral"
    assert params["method"] == "star"
    assert params["p"] == 3.0
    clone = PairwiseDissimilarity(**params)
    a = est.fit_transform(ITEMS[:3])
    b = clone.fit_transform(ITEMS[:3])
    assert np.array_equal(a, b)


def test_set_params_sklearn_style():
    est = PairwiseDissimilarity()
    est.set_params(measure="jaccard", n_jobs=2)
    assert est.measure == "jaccard"
    D = est.fit_transform(ITEMS[:3])
    assert D.shape == (3, 3)


def test_fit_validates_tokens_and_inputs():
    with pytest.raises(DataError):
        PairwiseDissimilarity(measure="bogus").fit(ITEMS)
    with pytest.raises(DataError):
        PairwiseDissimilarity().fit([])
    with pytest.raises(DataError):
        PairwiseDissimilarity().fit([ITEMS[0], "not a hypergraph"])


def test_check_sequence_equal_n():
    with pytest.raises(DataError):
        check_hypergraph_sequence([gen_erh(5, 4, 2, seed=0), gen_erh(6, 4, 2, seed=0)])
    ok = check_hypergraph_sequence([gen_erh(5, 4, 2, seed=0)])
    assert len(ok) == 1


def test_composes_with_sklearn_precomputed_consumers():
    from sklearn.cluster import AgglomerativeClustering
    D = PairwiseDissimilarity(measure="spectral").fit_transform(ITEMS)
    clust = AgglomerativeClustering(n_clusters=2, metric="precomputed", linkage="average")
    labels = clust.fit_predict(D)
    assert len(labels) == len(ITEMS)

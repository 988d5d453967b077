"""Hypergraph dissimilarity measures.

Compare hypergraphs two ways: indirectly, by expanding to graphs (clique or
projected star) and applying graph dissimilarity measures; or directly, on
sparse supersymmetric adjacency/Laplacian tensors via tensor spectra and
nonlinear centrality. Ships with synthetic generators, null models, a
permutation test, and a ROC/AUC evaluation harness.
"""

from .centrality import CentralityConfig, CentralityResult, nsm_centrality
from .compare import dissimilarity, expand, make_measure
from .errors import DataError, HdmError, NumericalError
from .estimators import PairwiseDissimilarity, check_hypergraph_sequence
from .evaluation import (DistanceMatrix, PermTestResult, RocResult,
                         distance_matrix, permutation_test, roc_auc)
from .expansion import (ExpandedGraph, LaplacianMatrix, clique_expand_standard,
                        clique_laplacian_bolla, normalized_laplacian,
                        star_expand, star_project)
from .generators import (GenSpec, gen_erh, gen_sfh, gen_wsh, generate,
                         null_cl, null_cl_uniform, null_er, sample_null)
from .graph_measures import (GDM_MEASURES, GdmParams, eigenvector_centrality,
                             gdm_centrality, gdm_deltacon, gdm_hamming,
                             gdm_heat_wavelet, gdm_jaccard, gdm_netlsd,
                             gdm_spanning_tree, gdm_spectral_density,
                             gdm_spectral_lp)
from .hypergraph import (Hypergraph, IncidenceView, incidence,
                         parse_hgf, parse_incidence_csv, write_hgf)
from .stats import (HyperStats, TimeSeriesMatrix, hyper_stats,
                    multicorrelation, parse_timeseries_csv,
                    timeseries_to_hypergraph)
from .tensor import SymTensor, adjacency_tensor, alpha_coefficient, laplacian_tensor, tensor_apply
from .tensor_measures import (DIRECT_MEASURES, DirectHdmParams, dhdm_centrality,
                              dhdm_hamming, dhdm_jaccard, dhdm_spectral_h,
                              dhdm_spectral_s)
from .tensor_spectra import (HEigenConfig, SpectralSummary,
                             h_eigenvalues_desk, hosvd_singular_values)

__version__ = "0.1.0"

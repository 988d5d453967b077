"""Command-line interface.

Subcommands: gen, null, stats, ingest-ts, compare, matrix, roc, permtest,
spectra, centrality, tensor. Exit codes: 0 success, 1 usage error, 2
data/validation error, 3 numerical failure. Every CSV output starts with a
``#provenance`` comment carrying the tool version, subcommand, and seed, so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .centrality import CentralityConfig, nsm_centrality
from .compare import dissimilarity, expand, make_measure
from .errors import DataError, NumericalError
from .expansion import clique_laplacian_bolla
from .evaluation import (distance_matrix, format_distance_matrix_csv,
                         format_roc_csv, parse_distance_matrix_csv,
                         permutation_test, roc_auc)
from .generators import NULL_MODELS, GenSpec, generate, sample_null
from .graph_measures import GDM_MEASURES, GdmParams, get_normalized_laplacian
from .hypergraph import Hypergraph, parse_hgf, parse_incidence_csv, write_hgf
from .stats import DEFAULT_CORRELATION_THRESHOLD, hyper_stats, parse_timeseries_csv, timeseries_to_hypergraph
from .tensor import adjacency_tensor, laplacian_tensor
from .tensor_measures import DIRECT_MEASURES, DirectHdmParams
from .tensor_spectra import HEigenConfig, h_eigenvalues_desk, hosvd_singular_values

import numpy as np


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # spec reserves exit code 2 for data errors; usage problems exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _provenance(args) -> str:
    return f"#provenance,hdm {__version__},{args.command},seed={args.seed}"


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc


def _load_hypergraph(path: str, args=None) -> Hypergraph:
    text = _read_text(path)
    if path.endswith(".csv"):
        return parse_incidence_csv(text)
    merge = bool(args and getattr(args, "merge_duplicates", False))
    return parse_hgf(text, merge_duplicates=merge)


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _fmt(v: float) -> str:
    return f"{v + 0.0:.17g}"  # maps -0.0 to 0.0


def _gdm_params(args) -> GdmParams:
    eps = args.eps if args.eps == "auto" else float(args.eps)
    return GdmParams(p=args.p, sigma=args.sigma, eps=eps)


def _direct_params(args) -> DirectHdmParams:
    return DirectHdmParams(p=args.p, heigen=HEigenConfig(seed=args.seed))


def _check_measure_method(measure: str, method: str) -> None:
    if method == "tensor":
        if measure not in DIRECT_MEASURES:
            raise UsageError(f"measure {measure!r} is not a tensor measure "
                             f"(choose from {sorted(DIRECT_MEASURES)})")
    else:
        if measure not in GDM_MEASURES:
            raise UsageError(f"measure {measure!r} is not a graph measure "
                             f"(choose from {sorted(GDM_MEASURES)})")


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_gen(args) -> int:
    spec = GenSpec(model=args.model, n=args.n, m=args.m, k=args.k,
                   mu=args.mu, p_rewire=args.p_rewire, d=args.d, seed=args.seed)
    g = generate(spec)
    _emit(_provenance(args) + "\n" + write_hgf(g))
    return 0


def _cmd_null(args) -> int:
    ref = _load_hypergraph(args.ref, args)
    g = sample_null(ref, args.model, args.seed, k=args.k)
    _emit(_provenance(args) + "\n" + write_hgf(g))
    return 0


def _cmd_stats(args) -> int:
    st = hyper_stats(_load_hypergraph(args.file, args))
    hist = ";".join(f"{d}:{c}" for d, c in sorted(st.degree_histogram.items()))
    fields = [
        ("n", str(st.n)), ("m", str(st.m)), ("k_max", str(st.k_max)),
        ("connected", str(st.connected).lower()),
        ("avg_path_length", _fmt(st.avg_path_length)),
        ("unreachable_fraction", _fmt(st.unreachable_fraction)),
        ("mean_clustering", _fmt(st.mean_clustering)),
        ("degree_histogram", hist),
    ]
    if args.format == "text":
        _emit("".join(f"{k}: {v}\n" for k, v in fields))
    else:
        _emit(_provenance(args) + "\n" + "".join(f"{k},{v}\n" for k, v in fields))
    return 0


def _cmd_ingest_ts(args) -> int:
    ts = parse_timeseries_csv(_read_text(args.file))
    g = timeseries_to_hypergraph(ts, threshold=args.threshold)
    _emit(_provenance(args) + "\n" + write_hgf(g))
    return 0


def _cmd_compare(args) -> int:
    _check_measure_method(args.measure, args.method)
    g1 = _load_hypergraph(args.file_a, args)
    g2 = _load_hypergraph(args.file_b, args)
    value = dissimilarity(g1, g2, args.measure, args.method,
                          gdm_params=_gdm_params(args), direct_params=_direct_params(args))
    _emit(_fmt(value) + "\n")
    return 0


def _cmd_matrix(args) -> int:
    _check_measure_method(args.measure, args.method)
    items = [_load_hypergraph(p, args) for p in args.files]
    if args.labels:
        labels = [t.strip() for t in args.labels.split(",")]
        if len(labels) != len(items):
            raise UsageError("--labels count does not match file count")
    else:
        labels = [Path(p).stem for p in args.files]
    fn = make_measure(args.measure, args.method,
                      gdm_params=_gdm_params(args), direct_params=_direct_params(args))
    dm = distance_matrix(items, fn, labels=labels, measure_name=args.measure,
                         n_jobs=args.threads)
    _emit(format_distance_matrix_csv(dm, prelude=[_provenance(args)]))
    return 0


def _cmd_roc(args) -> int:
    dm = parse_distance_matrix_csv(_read_text(args.matrix))
    _emit(format_roc_csv(roc_auc(dm), prelude=[_provenance(args)]))
    return 0


def _cmd_permtest(args) -> int:
    _check_measure_method(args.measure, args.method)
    g1 = _load_hypergraph(args.file_a, args)
    g2 = _load_hypergraph(args.file_b, args)
    fn = make_measure(args.measure, args.method,
                      gdm_params=_gdm_params(args), direct_params=_direct_params(args))
    res = permutation_test(g1, g2, fn, null_model=args.null,
                           samples=args.samples, level=args.alpha, seed=args.seed)
    lines = [_provenance(args),
             f"observed,{_fmt(res.observed)}",
             f"p_value,{_fmt(res.p_value)}",
             f"level,{_fmt(res.level)}",
             f"reject,{str(res.reject).lower()}",
             "null_distances," + ",".join(_fmt(v) for v in res.null_distances)]
    _emit("\n".join(lines) + "\n")
    return 0


def _cmd_spectra(args) -> int:
    g = _load_hypergraph(args.file, args)
    lines = [_provenance(args)]
    if args.kind == "laplacian-eigs":
        lap = get_normalized_laplacian(expand(g, args.method))
        lines.append("value")
        lines.extend(_fmt(v) for v in np.linalg.eigvalsh(lap.M))
    elif args.kind == "hosvd":
        s = hosvd_singular_values(laplacian_tensor(g))
        lines.append("value")
        lines.extend(_fmt(v) for v in s.values)
    else:  # h-eigs
        s = h_eigenvalues_desk(laplacian_tensor(g), HEigenConfig(seed=args.seed))
        lines.append("value,residual")
        lines.extend(f"{_fmt(v)},{_fmt(r)}" for v, r in zip(s.values, s.residuals))
    _emit("\n".join(lines) + "\n")
    return 0


def _cmd_centrality(args) -> int:
    g = _load_hypergraph(args.file, args)
    res = nsm_centrality(g, CentralityConfig(family=args.family, p=args.p))
    if not res.converged:
        raise NumericalError("centrality power method did not converge")
    lines = [_provenance(args), "kind,index,value"]
    lines.extend(f"node,{i},{_fmt(v)}" for i, v in enumerate(res.c))
    lines.extend(f"edge,{j},{_fmt(v)}" for j, v in enumerate(res.e))
    _emit("\n".join(lines) + "\n")
    return 0


def _cmd_tensor(args) -> int:
    g = _load_hypergraph(args.file, args)
    T = adjacency_tensor(g) if args.kind == "adjacency" else laplacian_tensor(g)
    lines = [_provenance(args), f"#order,{T.order}", f"#dim,{T.dim}"]
    for t in sorted(T.entries):
        lines.append(",".join(str(i) for i in t) + "," + _fmt(T.entries[t]))
    _emit("\n".join(lines) + "\n")
    return 0


def _cmd_expand(args) -> int:
    g = _load_hypergraph(args.file, args)
    if args.method == "bolla":
        if args.what != "laplacian":
            raise UsageError("the bolla method only produces a laplacian matrix")
        M = clique_laplacian_bolla(g).M
    else:
        G = expand(g, args.method)
        M = G.A if args.what == "adjacency" else get_normalized_laplacian(G).M
    lines = [_provenance(args)]
    lines.extend(",".join(_fmt(v) for v in row) for row in M)
    _emit("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=("csv", "text"), default="csv")
    common.add_argument("--quiet", action="store_true")
    common.add_argument("--merge-duplicates", dest="merge_duplicates", action="store_true",
                        help="sum the weights of repeated edge sets instead of rejecting")

    measure_opts = _Parser(add_help=False)
    measure_opts.add_argument("--measure", required=True)
    measure_opts.add_argument("--method", choices=("clique", "star", "tensor"), default="clique")
    measure_opts.add_argument("--p", type=float, default=2.0)
    measure_opts.add_argument("--sigma", type=float, default=0.015)
    measure_opts.add_argument("--eps", default="auto")

    parser = _Parser(prog="hdm", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hdm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a synthetic hypergraph")
    p.add_argument("model", choices=("erh", "sfh", "wsh"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mu", type=float, default=0.5)
    p.add_argument("--p-rewire", dest="p_rewire", type=float, default=0.1)
    p.add_argument("--d", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("null", parents=[common], help="sample a null model of a reference")
    p.add_argument("model", choices=NULL_MODELS)
    p.add_argument("--ref", required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_null)

    p = sub.add_parser("stats", parents=[common], help="descriptive statistics")
    p.add_argument("file")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("ingest-ts", parents=[common],
                       help="build a hypergraph from time-series multi-correlations")
    p.add_argument("file")
    p.add_argument("--threshold", type=float, default=DEFAULT_CORRELATION_THRESHOLD)
    p.set_defaults(func=_cmd_ingest_ts)

    p = sub.add_parser("compare", parents=[common, measure_opts],
                       help="dissimilarity between two hypergraphs")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("matrix", parents=[common, measure_opts],
                       help="pairwise distance matrix over hypergraph files")
    p.add_argument("files", nargs="+")
    p.add_argument("--labels", default="")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("roc", parents=[common], help="ROC curve and AUC of a distance matrix")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_roc)

    p = sub.add_parser("permtest", parents=[common, measure_opts],
                       help="permutation significance test")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--null", choices=NULL_MODELS, default=None)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--alpha", type=float, default=0.05)
    p.set_defaults(func=_cmd_permtest)

    p = sub.add_parser("spectra", parents=[common], help="spectral summaries as CSV")
    p.add_argument("file")
    p.add_argument("--kind", choices=("laplacian-eigs", "hosvd", "h-eigs"), required=True)
    p.add_argument("--method", choices=("clique", "star"), default="clique")
    p.set_defaults(func=_cmd_spectra)

    p = sub.add_parser("centrality", parents=[common], help="node/edge centrality as CSV")
    p.add_argument("file")
    p.add_argument("--family", choices=("linear", "log-exp", "lp"), default="log-exp")
    p.add_argument("--p", type=float, default=2.0)
    p.set_defaults(func=_cmd_centrality)

    p = sub.add_parser("tensor", parents=[common], help="dump canonical tensor entries as CSV")
    p.add_argument("file")
    p.add_argument("--kind", choices=("adjacency", "laplacian"), default="laplacian")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("expand", parents=[common], help="export an expansion matrix as CSV")
    p.add_argument("file")
    p.add_argument("--method", choices=("clique", "star", "bolla"), default="clique")
    p.add_argument("--what", choices=("adjacency", "laplacian"), default="adjacency")
    p.set_defaults(func=_cmd_expand)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"hdm: error: {exc}\n")
        return 1
    except DataError as exc:
        sys.stderr.write(f"hdm: data error: {exc}\n")
        return 2
    except NumericalError as exc:
        sys.stderr.write(f"hdm: numerical error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())

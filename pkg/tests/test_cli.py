import numpy as np
import pytest

from hdm import parse_hgf
from hdm.cli import main
from hdm.evaluation import parse_distance_matrix_csv


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_gen(capsys, tmp_path, name, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    path = tmp_path / name
    path.write_text(out)
    return path


def test_gen_is_byte_identical_per_seed(capsys):
    args = ["gen", "erh", "--n", "12", "--m", "10", "--k", "3", "--seed", "7"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith("#provenance,hdm ")
    g = parse_hgf(out1)
    assert g.n == 12 and g.m == 10
    _, out3, _ = run(capsys, "gen", "erh", "--n", "12", "--m", "10", "--k", "3", "--seed", "8")
    assert out3 != out1


def test_gen_other_models(capsys):
    code, out, err = run(capsys, "gen", "sfh", "--n", "20", "--m", "15", "--k", "3",
                         "--mu", "0.5", "--seed", "1")
    assert code == 0
    assert parse_hgf(out).n == 20
    code, out, err = run(capsys, "gen", "wsh", "--n", "20", "--d", "3", "--k", "3",
                         "--p-rewire", "0.2", "--seed", "1")
    assert code == 0
    assert parse_hgf(out).m == 20 + 5


def test_compare_identical_prints_zero(capsys, tmp_path):
    a = write_gen(capsys, tmp_path, "a.hgf",
                  "gen", "erh", "--n", "10", "--m", "8", "--k", "3", "--seed", "3")
    code, out, err = run(capsys, "compare", str(a), str(a),
                         "--measure", "hamming", "--method", "clique")
    assert code == 0
    assert out == "0\n"


def test_compare_tensor_route(capsys, tmp_path):
    a = write_gen(capsys, tmp_path, "a.hgf",
                  "gen", "erh", "--n", "8", "--m", "6", "--k", "3", "--seed", "3")
    b = write_gen(capsys, tmp_path, "b.hgf",
                  "gen", "erh", "--n", "8", "--m", "6", "--k", "3", "--seed", "4")
    code, out, _ = run(capsys, "compare", str(a), str(b),
                       "--measure", "t-hamming", "--method", "tensor")
    assert code == 0
    assert float(out) > 0


def test_usage_errors_exit_1(capsys, tmp_path):
    a = write_gen(capsys, tmp_path, "a.hgf",
                  "gen", "erh", "--n", "8", "--m", "6", "--k", "3", "--seed", "3")
    # unknown subcommand / missing required flags
    assert run(capsys, "transmogrify")[0] == 1
    assert run(capsys, "gen", "erh", "--m", "6", "--k", "3")[0] == 1
    # measure/method mismatch
    code, _, err = run(capsys, "compare", str(a), str(a),
                       "--measure", "t-hamming", "--method", "clique")
    assert code == 1
    assert "not a graph measure" in err


def test_data_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "stats", str(tmp_path / "missing.hgf"))[0] == 2
    bad = tmp_path / "bad.hgf"
    bad.write_text("hgf 9\nnodes 2\n")
    assert run(capsys, "stats", str(bad))[0] == 2


def test_numerical_error_exit_3(capsys, tmp_path):
    # eps = 0.5 with edge weight 4 makes I + eps^2 D - eps A exactly singular
    g = tmp_path / "w4.hgf"
    g.write_text("hgf 1\nnodes 2\nedge 4 0 1\n")
    code, _, err = run(capsys, "compare", str(g), str(g),
                       "--measure", "deltacon", "--eps", "0.5")
    assert code == 3
    assert "numerical" in err


def test_matrix_roc_pipeline(capsys, tmp_path):
    files, labels = [], []
    for i in range(3):
        files.append(str(write_gen(capsys, tmp_path, f"e{i}.hgf",
                     "gen", "erh", "--n", "14", "--m", "12", "--k", "3", "--seed", str(i))))
        labels.append("erh")
    for i in range(3):
        files.append(str(write_gen(capsys, tmp_path, f"s{i}.hgf",
                     "gen", "sfh", "--n", "14", "--m", "12", "--k", "3",
                     "--mu", "0.5", "--seed", str(i))))
        labels.append("sfh")
    code, out, err = run(capsys, "matrix", *files, "--measure", "spectral",
                         "--labels", ",".join(labels))
    assert code == 0, err
    assert out.startswith("#provenance,hdm ")
    dm = parse_distance_matrix_csv(out)
    assert dm.labels == tuple(labels)

    mat = tmp_path / "D.csv"
    mat.write_text(out)
    code, out, err = run(capsys, "roc", "--matrix", str(mat))
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[1] == "epsilon,tpr,fpr"
    assert lines[-1].startswith("#auc,")
    assert 0.0 <= float(lines[-1].split(",")[1]) <= 1.0


def test_matrix_threads_do_not_change_bytes(capsys, tmp_path):
    files = [str(write_gen(capsys, tmp_path, f"t{i}.hgf",
                "gen", "erh", "--n", "12", "--m", "10", "--k", "3", "--seed", str(i)))
             for i in range(4)]
    _, out1, _ = run(capsys, "matrix", *files, "--measure", "hamming", "--threads", "1")
    _, out4, _ = run(capsys, "matrix", *files, "--measure", "hamming", "--threads", "4")
    assert out1 == out4


def test_stats_formats(capsys, tmp_path):
    a = write_gen(capsys, tmp_path, "a.hgf",
                  "gen", "erh", "--n", "10", "--m", "8", "--k", "3", "--seed", "3")
    code, out, _ = run(capsys, "stats", str(a))
    assert code == 0
    assert out.startswith("#provenance")
    assert "avg_path_length," in out
    code, out, _ = run(capsys, "stats", str(a), "--format", "text")
    assert code == 0
    assert "avg_path_length: " in out


def test_ingest_ts_default_threshold(capsys, tmp_path):
    rng = np.random.default_rng(0)
    x = rng.standard_normal(400)
    cols = [x + 0.4 * rng.standard_normal(400) for _ in range(3)]
    cols += [rng.standard_normal(400) for _ in range(4)]
    rows = [",".join(f"{v:.9g}" for v in row) for row in np.stack(cols, axis=1)]
    ts = tmp_path / "neurons.csv"
    ts.write_text("\n".join(rows) + "\n")
    code, out, _ = run(capsys, "ingest-ts", str(ts))
    assert code == 0
    g = parse_hgf(out)
    assert g.edge_sets() == {(0, 1, 2)}
    assert all(w > 0.93 for _, w in g.edges)


def test_null_subcommand(capsys, tmp_path):
    ref = write_gen(capsys, tmp_path, "ref.hgf",
                    "gen", "erh", "--n", "12", "--m", "10", "--k", "3", "--seed", "3")
    code, out1, _ = run(capsys, "null", "cl-uniform", "--ref", str(ref), "--seed", "5")
    assert code == 0
    code, out2, _ = run(capsys, "null", "cl-uniform", "--ref", str(ref), "--seed", "5")
    assert out1 == out2
    g = parse_hgf(out1)
    assert g.n == 12
    assert all(len(vs) == 3 for vs, _ in g.edges)


def test_permtest_output(capsys, tmp_path):
    a = write_gen(capsys, tmp_path, "a.hgf",
                  "gen", "erh", "--n", "12", "--m", "10", "--k", "3", "--seed", "3")
    b = write_gen(capsys, tmp_path, "b.hgf",
                  "gen", "sfh", "--n", "12", "--m", "10", "--k", "3",
                  "--mu", "0.5", "--seed", "4")
    code, out, err = run(capsys, "permtest", str(a), str(b), "--measure", "spectral",
                         "--null", "cl-uniform", "--samples", "25", "--alpha", "0.05",
                         "--seed", "11")
    assert code == 0, err
    assert "observed," in out and "p_value," in out and "reject," in out
    _, out2, _ = run(capsys, "permtest", str(a), str(b), "--measure", "spectral",
                     "--null", "cl-uniform", "--samples", "25", "--alpha", "0.05",
                     "--seed", "11")
    assert out == out2


def test_spectra_kinds(capsys, tmp_path):
    a = write_gen(capsys, tmp_path, "a.hgf",
                  "gen", "erh", "--n", "8", "--m", "7", "--k", "3", "--seed", "3")
    code, out, _ = run(capsys, "spectra", str(a), "--kind", "laplacian-eigs")
    assert code == 0
    values = [float(v) for v in out.strip().split("\n")[2:]]
    assert len(values) == 8
    code, out, _ = run(capsys, "spectra", str(a), "--kind", "hosvd")
    assert code == 0
    code, out, _ = run(capsys, "spectra", str(a), "--kind", "h-eigs", "--seed", "2")
    assert code == 0
    assert out.strip().split("\n")[1] == "value,residual"


def test_centrality_csv(capsys, tmp_path):
    # ring keeps every vertex covered
    ring = tmp_path / "ring.hgf"
    ring.write_text("hgf 1\nnodes 6\n" +
                    "".join(f"edge 1 {i} {(i+1) % 6} {(i+2) % 6}\n" for i in range(6)))
    code, out, _ = run(capsys, "centrality", str(ring), "--family", "log-exp")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[1] == "kind,index,value"
    nodes = [ln for ln in lines if ln.startswith("node,")]
    edges = [ln for ln in lines if ln.startswith("edge,")]
    assert len(nodes) == 6 and len(edges) == 6
    total = sum(float(ln.split(",")[2]) for ln in nodes)
    assert total == pytest.approx(1.0)


def test_tensor_dump(capsys, tmp_path):
    one = tmp_path / "one.hgf"
    one.write_text("hgf 1\nnodes 3\nedge 1 0 1 2\n")
    code, out, _ = run(capsys, "tensor", str(one), "--kind", "laplacian")
    assert code == 0
    lines = out.strip().split("\n")
    assert "#order,3" in lines
    assert "0,1,2,-0.5" in lines


def test_merge_duplicates_flag(capsys, tmp_path):
    dup = tmp_path / "dup.hgf"
    dup.write_text("hgf 1\nnodes 3\nedge 1 0 1\nedge 2 1 0\n")
    assert run(capsys, "stats", str(dup))[0] == 2  # strict by default
    code, out, _ = run(capsys, "stats", str(dup), "--merge-duplicates")
    assert code == 0
    assert "m,1" in out


def test_expand_matrix_export(capsys, tmp_path):
    one = tmp_path / "one.hgf"
    one.write_text("hgf 1\nnodes 3\nedge 1 0 1 2\n")
    code, out, _ = run(capsys, "expand", str(one), "--method", "clique")
    assert code == 0
    rows = [[float(v) for v in ln.split(",")]
            for ln in out.strip().split("\n") if not ln.startswith("#")]
    assert rows == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    code, out, _ = run(capsys, "expand", str(one), "--method", "bolla", "--what", "laplacian")
    assert code == 0
    assert "0.66666666666666" in out
    code, _, err = run(capsys, "expand", str(one), "--method", "bolla", "--what", "adjacency")
    assert code == 1


def test_incidence_csv_input_path(capsys, tmp_path):
    inc = tmp_path / "inc.csv"
    inc.write_text("1,0\n1,1\n0,1\n")
    code, out, _ = run(capsys, "stats", str(inc))
    assert code == 0
    assert "n,3" in out

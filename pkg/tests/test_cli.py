"""Command-line interface: grammar, subcommands, reports, exit codes."""

import json
import os

import pytest

from tokenaut import parse_edge_list, permutation_from_str
from tokenaut.cli import main, parse_graph_spec, UsageError
from tokenaut.verify import VerificationReport
from tokenaut import cli as cli_module


def run(argv):
    return main(argv)


# -- graph spec grammar ----------------------------------------------------


def test_grammar_constructors():
    assert parse_graph_spec("kmn:2,3").n == 5
    assert parse_graph_spec("kn:4").n == 4
    assert parse_graph_spec("k4").n == 4  # bare shorthand
    assert parse_graph_spec("K4").n == 4
    assert parse_graph_spec("path:5").edge_count() == 4
    assert parse_graph_spec("cycle:5").edge_count() == 5
    assert parse_graph_spec("star:4").n == 5
    assert parse_graph_spec("cube:3").n == 8
    assert parse_graph_spec("prod:k2+path:3").n == 6
    assert parse_graph_spec(" cube:3 ").n == 8


def test_grammar_errors_cite_grammar():
    for bad in ("triangle:3", "path3", "kmn:3", "kmn:a,b", "prod:", "kn:0"):
        with pytest.raises(UsageError):
            parse_graph_spec(bad)
    try:
        parse_graph_spec("octahedron:6")
    except UsageError as exc:
        assert "kmn:M,N" in str(exc)


def test_file_spec_round_trip(tmp_path):
    p = tmp_path / "c5.el"
    rc = run(["build", "--graph", "cycle:5", "--k", "1", "--out", str(p)])
    assert rc == 0
    g = parse_graph_spec(f"file:{p}")
    assert g.n == 5 and g.edge_count() == 5
    assert g.label == "c5.el"


# -- build -----------------------------------------------------------------


def test_build_writes_canonical_edge_list_and_map(tmp_path):
    out = tmp_path / "f.el"
    rc = run(["build", "--graph", "kmn:2,3", "--k", "2", "--out", str(out)])
    assert rc == 0
    text = out.read_text()
    g = parse_edge_list(text)
    assert g.n == 10
    # output is already in canonical serialization
    from tokenaut import format_edge_list
    assert format_edge_list(g) == text
    side = (tmp_path / "f.el.map").read_text().splitlines()
    assert len(side) == 10
    assert side[0] == "0: {0,1}"
    assert all(line.split(":")[0] == str(i) for i, line in enumerate(side))


def test_bare_and_explicit_complete_graph_agree(tmp_path):
    a, b = tmp_path / "a.el", tmp_path / "b.el"
    assert run(["build", "--graph", "k4", "--k", "2", "--out", str(a)]) == 0
    assert run(["build", "--graph", "kn:4", "--k", "2", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()


def test_build_k_out_of_range(tmp_path, capsys):
    rc = run(["build", "--graph", "k4", "--k", "4",
              "--out", str(tmp_path / "x.el")])
    assert rc == 2
    assert "out of range" in capsys.readouterr().err


def test_build_scale_refusal(tmp_path, capsys):
    rc = run(["build", "--graph", "kmn:2,10", "--k", "6",
              "--out", str(tmp_path / "x.el")])
    assert rc == 3
    assert "refused" in capsys.readouterr().err


# -- aut ---------------------------------------------------------------------


def test_aut_reports_group(tmp_path, capsys):
    el = tmp_path / "t.el"
    report = tmp_path / "t.json"
    assert run(["build", "--graph", "kmn:2,3", "--k", "2",
                "--out", str(el)]) == 0
    rc = run(["aut", "--in", str(el), "--report", str(report)])
    assert rc == 0
    assert "order 48" in capsys.readouterr().out
    payload = json.loads(report.read_text())
    assert payload["order"] == "48"
    assert payload["degree"] == 10
    assert payload["instance"] == "t.el"
    assert payload["tool"] == "tokenaut"
    assert payload["node_count"] >= 1
    for text in payload["generators"]:
        assert permutation_from_str(text).degree == 10


def test_aut_missing_file(capsys):
    rc = run(["aut", "--in", "/nonexistent/g.el"])
    assert rc == 2
    assert "cannot read" in capsys.readouterr().err


# -- generators ---------------------------------------------------------------


def test_generators_bipartite_report(tmp_path, capsys):
    report = tmp_path / "g.json"
    rc = run(["generators", "--m", "2", "--n", "4", "--k", "3",
              "--report", str(report)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "predicted 3072" in out
    payload = json.loads(report.read_text())
    assert payload["predicted_order"] == payload["generated_order"] == "3072"
    assert payload["structure_tag"] == "WREATH_K2N_TIMES_Z2"
    assert len(payload["swap_families"]) == 6  # one per 2-subset of Y
    assert payload["swap_families"][0] == [[2, 3]]
    for text in payload["generators"]:
        assert permutation_from_str(text).degree == 20


def test_generators_cube_and_product(tmp_path):
    report = tmp_path / "c.json"
    assert run(["generators", "--r", "3", "--report", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["structure_tag"] == "CUBE"
    assert payload["predicted_order"] == payload["generated_order"] == "192"
    assert payload["swap_families"] == [[0], [1]]

    assert run(["generators", "--factors", "k2+path:3",
                "--report", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["structure_tag"] == "Z2POW_SEMIDIRECT"
    assert payload["predicted_order"] == "8"
    assert payload["swap_families"] == [[0]]


def test_generators_mode_exclusivity(capsys):
    assert run(["generators", "--m", "2", "--r", "3"]) == 2
    assert run(["generators", "--m", "2", "--n", "3"]) == 2
    assert run(["generators", "--m", "2", "--n", "3", "--k", "1,2"]) == 2
    assert run(["generators"]) == 2


# -- factor -------------------------------------------------------------------


def test_factor_writes_prime_edge_lists(tmp_path, capsys):
    el = tmp_path / "q3.el"
    assert run(["build", "--graph", "cube:3", "--k", "1",
                "--out", str(el)]) == 0
    rc = run(["factor", "--in", str(el)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "3 prime factor(s)" in out
    for i in range(3):
        path = tmp_path / f"q3.factor{i}.el"
        g = parse_edge_list(path.read_text())
        assert g.n == 2 and g.edge_count() == 1


def test_factor_prefix_override(tmp_path):
    el = tmp_path / "c4.el"
    assert run(["build", "--graph", "cycle:4", "--k", "1",
                "--out", str(el)]) == 0
    prefix = tmp_path / "out" / "fac"
    os.makedirs(tmp_path / "out")
    assert run(["factor", "--in", str(el), "--out", str(prefix)]) == 0
    assert (tmp_path / "out" / "fac.factor0.el").exists()
    assert (tmp_path / "out" / "fac.factor1.el").exists()


def test_factor_rejects_disconnected(tmp_path, capsys):
    bad = tmp_path / "bad.el"
    bad.write_text("4 2\n0 1\n2 3\n")
    rc = run(["factor", "--in", str(bad)])
    assert rc == 2


# -- verify -------------------------------------------------------------------


def test_verify_bipartite_fan_out(tmp_path, capsys):
    report = tmp_path / "vp.json"
    rc = run(["verify", "bipartite", "--m", "2", "--n", "3,4", "--k", "2",
              "--report", str(report)])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 2
    for i, order in enumerate(("48", "384")):
        payload = json.loads((tmp_path / f"vp.{i}.json").read_text())
        assert payload["computed_order"] == order
        assert payload["equality"] is True
    assert not report.exists()  # only indexed files on fan-out


def test_verify_single_report_not_indexed(tmp_path):
    report = tmp_path / "cube.json"
    rc = run(["verify", "cube", "--r", "3", "--report", str(report)])
    assert rc == 0
    assert json.loads(report.read_text())["computed_order"] == "192"


def test_verify_product_records_conjecture(capsys):
    rc = run(["verify", "product", "--factors", "k2+path:3"])
    assert rc == 0
    assert "full-group-equality observed=True" in capsys.readouterr().out


def test_verify_parallel_jobs_match_serial(tmp_path, capsys):
    argv = ["verify", "bipartite", "--m", "2", "--n", "3,4", "--k", "2"]
    assert run(argv) == 0
    serial = capsys.readouterr().out
    assert run(argv + ["--jobs", "2"]) == 0
    parallel = capsys.readouterr().out
    assert serial == parallel


def test_verify_refusal_exit_code(capsys):
    rc = run(["verify", "cube", "--r", "5"])
    assert rc == 3
    assert "REFUSED" in capsys.readouterr().out


def test_verify_mixed_refusal_and_pass(capsys):
    rc = run(["verify", "cube", "--r", "3,5"])
    assert rc == 3  # refusal dominates a pass
    out = capsys.readouterr().out
    assert "PASS" in out and "REFUSED" in out


def test_verify_failure_exit_code(monkeypatch, capsys):
    failing = VerificationReport(
        instance="bipartite(m=2,n=3,k=2)", computed_order="48",
        predicted_order="96", generators_certified=True,
        subgroup_certified=False, equality=False, conjecture_flag=None,
        wall_time=0.0, node_count=1)
    monkeypatch.setattr(cli_module, "verify_bipartite",
                        lambda m, n, k, guard: failing)
    rc = run(["verify", "bipartite", "--m", "2", "--n", "3", "--k", "2"])
    assert rc == 4
    assert "FAIL" in capsys.readouterr().out


def test_verify_usage_errors(capsys):
    assert run(["verify", "bipartite", "--m", "2"]) == 2
    assert run(["verify", "cube"]) == 2
    assert run(["verify", "product"]) == 2


# -- process-level behaviour ---------------------------------------------------


def test_version_flag(capsys):
    rc = run(["--version"])
    assert rc == 0
    from tokenaut import __version__
    assert __version__ in capsys.readouterr().out


def test_unknown_subcommand_exits_2():
    assert run(["frobnicate"]) == 2


def test_no_tmp_files_left_behind(tmp_path):
    el = tmp_path / "g.el"
    run(["build", "--graph", "kmn:2,3", "--k", "2", "--out", str(el)])
    run(["verify", "bipartite", "--m", "2", "--n", "3", "--k", "2",
         "--report", str(tmp_path / "r.json")])
    leftovers = [p for p in os.listdir(tmp_path) if ".tmp" in p]
    assert leftovers == []

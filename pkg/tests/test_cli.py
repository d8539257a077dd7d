"""Command line behaviour: exit codes, output shapes, catalog resolution
and the JSONL results log."""

import hashlib
import json
import subprocess
import sys

import pytest

import ramseycheck as rc
from ramseycheck.cli import main, read_graph_lines

PETERSEN = rc.to_graph6(rc.petersen())
C5 = rc.to_graph6(rc.cycle_graph(5))
K3 = "Bw"


def write(tmp_path, name, *lines):
    p = tmp_path / name
    p.write_text("".join(ln + "\n" for ln in lines), encoding="ascii")
    return str(p)


# -- analyze -------------------------------------------------------------


def test_analyze_pass_exit0(tmp_path, capsys):
    path = write(tmp_path, "c5.g6", C5)
    rcode = main(["analyze", path, "--profile", "custom", "--s", "3", "--t", "3", "--n", "5"])
    out = capsys.readouterr()
    assert rcode == 0
    assert "1 graph(s): 1 pass, 0 fail, 0 error" in out.out
    assert "extrapolates" in out.err


def test_analyze_fail_exit1(tmp_path, capsys):
    path = write(tmp_path, "k3.g6", K3)
    rcode = main(["analyze", path])
    out = capsys.readouterr().out
    assert rcode == 1
    assert "graph 1  fail  digest" in out
    assert "ramsey-core" in out and "order" in out
    assert "degree-window" not in out  # not-applicable clauses stay quiet
    assert "1 graph(s): 0 pass, 1 fail, 0 error" in out


def test_analyze_verbose_shows_all_clauses(tmp_path, capsys):
    path = write(tmp_path, "k3.g6", K3)
    main(["analyze", path, "--verbose"])
    out = capsys.readouterr().out
    assert "degree-window" in out and "not-applicable" in out


def test_analyze_bad_line_exit2(tmp_path, capsys):
    path = write(tmp_path, "mixed.g6", K3, "garbage!!!")
    rcode = main(["analyze", path])
    out = capsys.readouterr().out
    assert rcode == 2
    assert "graph 2  error" in out
    assert "2 graph(s): 0 pass, 1 fail, 1 error" in out


def test_analyze_missing_file_exit2(capsys):
    rcode = main(["analyze", "/no/such/file.g6"])
    assert rcode == 2
    assert "error: cannot read" in capsys.readouterr().err


def test_analyze_empty_input_exit2(tmp_path, capsys):
    path = write(tmp_path, "empty.g6", "", "")
    rcode = main(["analyze", path])
    assert rcode == 2
    assert "no graphs" in capsys.readouterr().err


def test_analyze_custom_needs_order(tmp_path, capsys):
    path = write(tmp_path, "c5.g6", C5)
    rcode = main(["analyze", path, "--profile", "custom", "--s", "3", "--t", "3"])
    assert rcode == 2
    assert "custom profile needs" in capsys.readouterr().err


def test_analyze_json_roundtrip(tmp_path, capsys):
    path = write(tmp_path, "k3.g6", K3)
    main(["analyze", path, "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert payload["all_pass"] is False
    report = payload["results"][0]["envelope"]["report"]
    assert report["overall"] == "fail"
    assert report["clauses"][0]["id"] == "ramsey-core"


def test_analyze_jsonl_log(tmp_path, capsys):
    path = write(tmp_path, "mixed.g6", K3, "garbage!!!")
    log = tmp_path / "results.jsonl"
    main(["analyze", path, "--log", str(log)])
    capsys.readouterr()
    records = [json.loads(ln) for ln in log.read_text().splitlines()]
    assert len(records) == 2
    assert records[0]["tool"] == "ramseycheck"
    assert records[0]["input_digest"] == hashlib.sha256(K3.encode()).hexdigest()
    assert records[0]["report"]["overall"] == "fail"
    assert records[1]["error"]
    assert "report" not in records[1]
    main(["analyze", path, "--log", str(log)])  # appends, never truncates
    capsys.readouterr()
    assert len(log.read_text().splitlines()) == 4


# -- verify --------------------------------------------------------------


def test_verify_ramsey_ok(tmp_path, capsys):
    path = write(tmp_path, "c5.g6", C5)
    rcode = main(["verify", path, "--s", "3", "--t", "3"])
    assert rcode == 0
    assert "graph 1: ok" in capsys.readouterr().out


def test_verify_ramsey_fail(tmp_path, capsys):
    path = write(tmp_path, "p.g6", PETERSEN)
    rcode = main(["verify", path, "--s", "3", "--t", "4"])
    out = capsys.readouterr().out
    assert rcode == 1
    assert "FAIL" in out and "independent set" in out


def test_verify_r39_catalog_resolution(tmp_path, capsys, monkeypatch):
    good = tmp_path / "good"
    good.mkdir()
    g35 = rc.to_graph6(rc.circulant(35, (1, 7, 11, 16)))
    (good / "r3_9_35.g6").write_text(g35 + "\n", encoding="ascii")
    empty = tmp_path / "empty"
    empty.mkdir()

    monkeypatch.chdir(tmp_path)  # no ./catalog here
    monkeypatch.delenv("RAMSEYCHECK_CATALOG", raising=False)
    assert main(["verify", "--kind", "r39"]) == 2
    assert "not found" in capsys.readouterr().err

    monkeypatch.setenv("RAMSEYCHECK_CATALOG", str(good))
    assert main(["verify", "--kind", "r39"]) == 0
    assert "graph 1: ok" in capsys.readouterr().out

    # explicit flag beats the environment
    monkeypatch.setenv("RAMSEYCHECK_CATALOG", str(empty))
    assert main(["verify", "--kind", "r39", "--catalog", str(good)]) == 0
    capsys.readouterr()
    assert main(["verify", "--kind", "r39"]) == 2
    capsys.readouterr()


def test_verify_needs_path_for_ramsey(capsys):
    assert main(["verify"]) == 2
    assert "needs a graph file" in capsys.readouterr().err


# -- enumeration subcommands ---------------------------------------------


def test_degseq_output(capsys):
    assert main(["degseq", "172", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 13
    assert lines[0] == "(16, 25, 0, 0)"
    assert lines[-1] == "(28, 1, 12, 0)"


def test_degseq_empty_cell(capsys):
    assert main(["degseq", "184", "6"]) == 0
    out = capsys.readouterr()
    assert out.out == ""
    assert "no solutions" in out.err


def test_tables_output(capsys):
    assert main(["tables", "--d6", "0", "--e-min", "172", "--e-max", "173"]) == 0
    out = capsys.readouterr().out
    assert "table 1 (0 vertices of degree 6)" in out
    assert "  172: (16, 25, 0, 0)" in out
    assert "  173:" in out


def test_tables_singular_and_empty_cell(capsys):
    assert main(["tables", "--d6", "6", "--e-min", "184", "--e-max", "184"]) == 0
    out = capsys.readouterr().out
    assert "table 7 (6 vertices of degree 6)" in out
    assert "  184: -" in out
    assert main(["tables", "--d6", "1", "--e-min", "172", "--e-max", "172"]) == 0
    assert "table 2 (1 vertex of degree 6)" in capsys.readouterr().out


def test_audit_output(capsys):
    assert main(["audit"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[-1] == "5 flagged row(s)"
    assert len(lines) == 6
    assert all("checksum failed (order, edges); correction" in ln for ln in lines[:5])


def test_audit_all_rows(capsys):
    assert main(["audit", "--all"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 329
    assert sum(": ok" in ln for ln in lines) == 323


# -- partition and layers ------------------------------------------------


def test_partition_triples_table(capsys):
    assert main(["partition"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "h21 h22 h23 boundary"
    assert len(lines) == 16
    assert lines[1].split() == ["20", "14", "0", "48"]


def test_partition_of_graph(tmp_path, capsys):
    path = write(tmp_path, "p.g6", PETERSEN)
    assert main(["partition", path, "--vertex", "0"]) == 0
    out = capsys.readouterr().out
    assert "vertex 0: {1 common: 6}" in out
    assert "boundary edges: 6" in out
    assert "residual order: 6" in out


def test_layers_output(tmp_path, capsys):
    path = write(tmp_path, "p.g6", PETERSEN)
    assert main(["layers", path]) == 0
    assert "layer sizes from vertex 0: 1 3 6" in capsys.readouterr().out


def test_layers_bad_vertex(tmp_path, capsys):
    path = write(tmp_path, "p.g6", PETERSEN)
    assert main(["layers", path, "--vertex", "99"]) == 2
    assert "error" in capsys.readouterr().err


# -- gen -----------------------------------------------------------------


def test_gen_known_graphs(capsys):
    assert main(["gen", "petersen"]) == 0
    assert capsys.readouterr().out.strip() == PETERSEN
    assert main(["gen", "cycle", "5"]) == 0
    assert capsys.readouterr().out.strip() == C5
    assert main(["gen", "circulant", "13", "--offsets", "1", "5"]) == 0
    g = rc.parse_graph6(capsys.readouterr().out.strip())
    assert g.n == 13 and g.edge_count == 26


def test_gen_r39(capsys):
    assert main(["gen", "r39"]) == 0
    g = rc.parse_graph6(capsys.readouterr().out.strip())
    assert g.n == 35
    assert rc.verify_r39_critical(g)["ok"]


def test_gen_usage_errors(capsys):
    assert main(["gen", "cycle"]) == 2
    assert "needs N" in capsys.readouterr().err
    assert main(["gen", "circulant", "8", "--offsets", "9"]) == 2
    capsys.readouterr()


# -- input handling ------------------------------------------------------


def test_read_graph_lines_drops_header_and_blanks(tmp_path):
    path = write(tmp_path, "in.g6", ">>graph6<<", "", PETERSEN, "  ", C5)
    assert read_graph_lines(path) == [PETERSEN, C5]


def test_stdin_dash_via_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ramseycheck.cli", "layers", "-"],
        input=PETERSEN + "\n",
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert "layer sizes from vertex 0: 1 3 6" in proc.stdout


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("ramseycheck ")

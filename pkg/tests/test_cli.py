import json

import pytest

from cli.cache import ResultCache
from cli.commands import EXIT_NONEXISTENT, EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_VERIFY, run
from cli.report import ReportManager
from constructions.families import ConstructionParams, lifted_family
from constructions.witnesses import tsat_upper_witness, witness_excess
from graphs.graph import cycle_graph
from graphs.graph6 import decode_graph, encode_graph6
from graphs.saturation import is_tsat_witness
from main import main
from systems.serialization import dumps_system, loads_system

C5 = encode_graph6(cycle_graph(5)).decode()
P4 = "Ch"
C4 = encode_graph6(cycle_graph(4)).decode()


def _run(cli_config, capsys, *argv):
    code = run(list(argv), cli_config)
    out, err = capsys.readouterr()
    return code, out.strip(), err


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def test_construct_twin_free(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "construct", "twinfree", "--n", "9", "--r", "6", "--verify")
    assert code == EXIT_OK
    g = decode_graph(out)
    assert g.n == 9
    assert is_tsat_witness(g, 6)


def test_construct_system_family(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "construct", "system", "--t", "5", "--l", "2", "--verify")
    assert code == EXIT_OK
    inst = loads_system(out)
    assert inst.m == 20 and inst.primed


def test_construct_nonexistent(cli_config, capsys):
    code, out, err = _run(cli_config, capsys, "construct", "twinfree", "--n", "6", "--r", "3")
    assert code == EXIT_NONEXISTENT
    assert out == ""
    assert "nonexistent: r=3,n=6" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "ehm", "--n", "5"],
        ["construct", "lifted", "--t", "3", "--l", "2"],
        ["construct", "small", "--name", "heawood"],
        ["construct", "nosuch"],
    ],
)
def test_construct_usage_errors(cli_config, capsys, argv):
    code, _, _ = _run(cli_config, capsys, *argv)
    assert code == EXIT_USAGE


def test_construct_shattering_and_sparse6(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "construct", "shattering", "--k", "3")
    assert code == EXIT_OK
    assert out == "000,011,101,110"
    code, out, _ = _run(cli_config, capsys, "construct", "small", "--name", "petersen", "--format", "sparse6")
    assert code == EXIT_OK
    assert out.startswith(":")
    assert decode_graph(out).n == 10


def test_construct_reports_witness_excess(cli_config, capsys):
    code, out, err = _run(cli_config, capsys, "construct", "tsat_witness", "--n", "2000")
    assert code == EXIT_OK
    excess, constant = witness_excess(decode_graph(out), 6)
    assert f"excess: e-6n={excess} C={constant:.4f}" in err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_saturated_graph(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "verify", C5, "--twin-free")
    assert code == EXIT_OK
    verdict = json.loads(out)
    assert verdict["passed"] and verdict["twin_free"] and verdict["tsat_witness"]


def test_verify_reports_violating_pair(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "verify", P4)
    assert code == EXIT_VERIFY
    assert json.loads(out)["saturation"]["violating_pair"] == [0, 3]


def test_verify_twin_free_requirement(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "verify", C4)
    assert code == EXIT_OK
    verdict = json.loads(out)
    assert not verdict["twin_free"]
    assert sorted(verdict["twin_pairs"]) == [[0, 2], [1, 3]]
    assert json.loads(_run(cli_config, capsys, "verify", C5)[1])["twin_pairs"] == []
    assert _run(cli_config, capsys, "verify", C4, "--twin-free")[0] == EXIT_VERIFY


def test_verify_parse_error(cli_config, capsys):
    code, _, err = _run(cli_config, capsys, "verify", "D?")
    assert code == EXIT_PARSE
    assert "parse error at byte 2" in err


def test_verify_reads_files(cli_config, capsys, tmp_path):
    path = tmp_path / "c5.g6"
    path.write_text(C5 + "\n")
    assert _run(cli_config, capsys, "verify", str(path))[0] == EXIT_OK


def test_verify_system_maximality(cli_config, capsys):
    text = dumps_system(lifted_family(ConstructionParams(t=2, l=5)))
    code, out, _ = _run(cli_config, capsys, "verify", text)
    assert code == EXIT_OK
    code, out, _ = _run(cli_config, capsys, "verify", text, "--maximal")
    assert code == EXIT_VERIFY
    report = json.loads(out)
    assert not report["valid"]
    assert [c["name"] for c in report["conditions"] if not c["passed"]] == ["maximal"]


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def test_search_nonexistent_then_cached(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "search", "tsat", "--n", "6", "--r", "3")
    assert code == EXIT_OK
    first = json.loads(out)
    assert first["status"] == "nonexistent" and not first["cached"]
    code, out, _ = _run(cli_config, capsys, "search", "tsat", "--n", "6", "--r", "3")
    second = json.loads(out)
    assert second["cached"]
    assert second["status"] == "nonexistent"
    code, out, _ = _run(cli_config, capsys, "search", "tsat", "--n", "6", "--r", "3", "--no-cache")
    assert not json.loads(out)["cached"]


def test_search_found_record(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "search", "e3t_doubleprime", "--s", "2", "--t", "2")
    record = json.loads(out)
    assert (code, record["status"], record["value"]) == (EXIT_OK, "found", 1)
    assert record["witness_format"] == "system"


def test_search_budget_exceeded_is_not_cached(cli_config, capsys):
    code, out, _ = _run(
        cli_config, capsys, "search", "sat", "--n", "10", "--r", "4", "--budget-vertices", "9"
    )
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["status"] == "budget_exceeded"
    assert record["reason"] == "10 vertices exceeds cap 9"
    assert len(ResultCache(cli_config.cache_path)) == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["search", "s_rt", "--m", "4"],
        ["search", "sat", "--n", "4", "--r", "4", "--budget-vertices", "0"],
        ["search", "bogus"],
        ["frobnicate"],
        [],
    ],
)
def test_search_usage_errors(cli_config, capsys, argv):
    assert _run(cli_config, capsys, *argv)[0] == EXIT_USAGE


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def test_report_e_rt_before_formula(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "report", "e_rt", "--min", "1", "--max", "2")
    assert code == EXIT_OK
    assert "formula not reached inside the grid" in out
    assert "pre-window" in out


def test_report_existence_has_no_mismatch(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "report", "existence", "--max", "5")
    assert code == EXIT_OK
    assert "MISMATCH" not in out
    assert "none (n=r)" in out


def test_report_save(cli_config, capsys):
    code, _, err = _run(cli_config, capsys, "report", "e_rt", "--min", "1", "--max", "1", "--save")
    assert code == EXIT_OK
    assert "saved" in err
    manager = ReportManager(cli_config.reports_dir)
    assert len(manager.list_reports("e_rt")) == 1
    assert manager.read_reports("e_rt")[0].startswith("# e_rt report")


def test_report_list_and_previous(cli_config, capsys):
    assert _run(cli_config, capsys, "report", "e_rt", "--list")[1] == ""
    _run(cli_config, capsys, "report", "e_rt", "--min", "1", "--max", "1", "--save")
    code, out, _ = _run(cli_config, capsys, "report", "e_rt", "--list")
    assert code == EXIT_OK
    names = out.splitlines()
    assert len(names) == 1 and names[0].endswith(".md")
    code, out, _ = _run(cli_config, capsys, "report", "e_rt", "--previous", "1")
    assert code == EXIT_OK
    assert out.startswith("# e_rt report")
    code, _, err = _run(cli_config, capsys, "report", "e_rt", "--previous", "0")
    assert code == EXIT_USAGE
    assert "--previous must be positive" in err


def test_report_witness_row(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "report", "witness", "--min", "2000")
    assert code == EXIT_OK
    g = tsat_upper_witness(2000)
    excess, constant = witness_excess(g, 6)
    row = f"| 2000 | {g.edge_count} | 6 | yes | {excess} | {constant:.4f} |"
    assert row in out
    assert "n^0.8" in out


def test_report_witness_below_smallest_scale(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "report", "witness", "--min", "30")
    assert code == EXIT_OK
    assert "| 30 | - | - | - | - | - |" in out
    assert "- n=30:" in out


def test_report_stability(cli_config, capsys):
    code, out, _ = _run(cli_config, capsys, "report", "stability33", "--max", "5")
    assert code == EXIT_OK
    assert "(3,3) stability" in out


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def test_main_runs_verify(monkeypatch, capsys, tmp_path):
    monkeypatch.setenv("SATLAB_CACHE", str(tmp_path / "cache.jsonl"))
    assert main(["verify", C5]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["passed"]


def test_main_rejects_bad_config(monkeypatch, capsys):
    monkeypatch.setenv("SATLAB_WORKERS", "0")
    assert main(["verify", C5]) == EXIT_USAGE
    assert "workers must be positive" in capsys.readouterr().err

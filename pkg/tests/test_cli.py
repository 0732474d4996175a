import json
import subprocess
import sys

import pytest

from conftest import BIG_EXAMPLE, from_chains
from specine.cli import main
from specine.graphs import Graph, to_graph6


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_series_listings(capsys):
    assert run(capsys, "series", "m_bullet", "--max-degree", "10")[:2] == (0, "0,1,0,1,2,5,14,43,141,491,1778\n")
    assert run(capsys, "series", "p_inv", "--max-degree", "10")[1] == "0,1,1,3,9,29,99,353,1300,4913,18945\n"
    assert run(capsys, "series", "q", "--s", "0", "--t", "0", "--max-degree", "4")[1] == "0,1,-1,-1,0\n"
    assert run(capsys, "series", "q:0,0", "--max-degree", "4")[1] == "0,1,-1,-1,0\n"
    assert run(capsys, "series", "q", "--s", "inf", "--t", "1", "--max-degree", "4")[1] == "0,1,1,0,0\n"


def test_series_formats(capsys):
    status, out, _ = run(capsys, "series", "all_graphs", "--egf", "--max-degree", "5", "--format", "csv")
    assert status == 0 and out.splitlines()[0].startswith("degree") and out.splitlines()[-1].endswith("1024")
    status, out, _ = run(capsys, "series", "connected", "--max-degree", "4", "--format", "json")
    doc = json.loads(out)
    assert doc["series"] == "connected" and doc["kind"] == "type"
    assert [(c["num"], c["den"]) for c in doc["coefficients"]] == [(0, 1), (1, 1), (1, 1), (2, 1), (6, 1)]


def test_series_errors(capsys):
    status, out, err = run(capsys, "series", "foo")
    assert status == 2 and out == "" and "UnknownSeries" in err
    status, _, err = run(capsys, "series", "m_bullet", "--s", "1")
    assert status == 2


def test_joint_tables(capsys):
    status, out, _ = run(capsys, "joint", "4")
    lines = out.splitlines()
    assert status == 0
    assert lines[2:] == ["0   1 1 0 1", "1   1 1 0 0", "2   0 0 0 0", "3   1 0 0 0"]
    status, out, _ = run(capsys, "joint", "2")
    assert out.splitlines()[2:] == ["0   0 0", "1   0 1"]
    status, out, _ = run(capsys, "joint", "6", "--both")
    assert status == 0 and "brute force and species tables agree" in out


def test_joint_csv_and_json(capsys):
    _, out, _ = run(capsys, "joint", "3", "--format", "csv")
    assert out.splitlines() == ["reduction,s,t,count", ",0,2,1", ",2,0,1"]
    _, out, _ = run(capsys, "joint", "4", "--brute", "--format", "json")
    doc = json.loads(out)
    assert doc["tables"]["brute"][0]["n"] == 4 and doc["flags"] == []


def test_by_reduction(capsys):
    status, out, _ = run(capsys, "joint", "5", "--by-reduction", "--both")
    assert status == 0 and "agree" in out and "R=" in out
    status2, out2, _ = run(capsys, "by-reduction", "5", "--both")
    assert (status2, out2) == (status, out)


def test_joint_brute_cap(capsys):
    status, _, err = run(capsys, "joint", "9", "--brute")
    assert status == 2 and "capped" in err


def test_reduce(capsys, monkeypatch):
    big, _ = from_chains(BIG_EXAMPLE)
    status, out, _ = run(capsys, "reduce", "--trace", to_graph6(big))
    lines = out.splitlines()
    assert status == 0
    assert lines[0].startswith("input") and lines[-1] == "reduced Eikg after 2 round(s)"
    assert sum(1 for ln in lines if ln.startswith("round")) == 4
    assert run(capsys, "reduce", to_graph6(Graph.path(4)))[1] == "@\n"
    assert run(capsys, "reduce", "Eikg")[1] == "Eikg\n"
    status, out, _ = run(capsys, "reduce", stdin="Ch\nC~\n", monkeypatch=monkeypatch)
    assert out == "@\n@\n"


def test_reduce_errors(capsys):
    assert run(capsys, "reduce", "A_")[0] == 2
    assert run(capsys, "reduce", "--k2-as-bullet", "A_")[1] == "@\n"
    status, _, err = run(capsys, "reduce", "Ah")
    assert status == 2 and "ParseError" in err
    status, _, err = run(capsys, "reduce", to_graph6(Graph.from_edges(3, [(0, 1)])))
    assert status == 2 and "DisconnectedInput" in err


def test_decorate(capsys):
    _, out, _ = run(capsys, "decorate", "Bg")
    assert json.loads(out) == {"graph6": "@", "tags": {"0": "T2"}}
    _, out, _ = run(capsys, "decorate", "C~")
    assert json.loads(out) == {"graph6": "@", "tags": {"0": "S3"}}


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "5", "--count")[1] == "21\n"
    status, out, _ = run(capsys, "enumerate", "4")
    assert status == 0 and len(out.split()) == 6
    doc = json.loads(run(capsys, "enumerate", "3", "--format", "json")[1])
    assert doc["count"] == 2
    status, _, err = run(capsys, "enumerate", "9")
    assert status == 2 and "CapExceeded" in err


def test_check_small(capsys, tmp_path):
    report = tmp_path / "r.json"
    status, out, _ = run(capsys, "check", "--max-n", "4", "--max-degree", "6", "--report", str(report))
    assert status == 0
    assert "figures.spot_values" in out
    doc = json.loads(report.read_text())
    assert doc["ok"] and any(c["name"] == "figures.spot_values" for c in doc["checks"])


def test_check_output_is_deterministic(capsys):
    args = ["check", "--max-n", "4", "--max-degree", "6", "--format", "json", "--only", "joint.dual_path"]
    a = run(capsys, *args)[1]
    b = run(capsys, *args)[1]
    assert a == b and json.loads(a)["checks"][0]["name"] == "joint.dual_path"


def test_check_flag_validation(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--max-n", "8"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["check", "--max-n", "6", "--max-degree", "4"])
    capsys.readouterr()


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "specine", "series", "comating", "--max-degree", "5"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout == "0,1,0,1,3,11\n"

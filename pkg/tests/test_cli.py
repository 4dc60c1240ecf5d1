import json

import pytest

from chromatica.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_csf_net_in_e(capsys):
    code, out, _ = run(capsys, "csf", "--family", "net", "--n", "3", "--basis", "e")
    assert code == 0
    assert out.strip() == "12 e_{6} + 18 e_{5,1} + 12 e_{4,2} + 6 e_{4,1,1} - 6 e_{3,3} + 6 e_{3,2,1}"


def test_qcsf_text(capsys):
    code, out, _ = run(capsys, "qcsf", "--m", "2,3", "--basis", "e")
    assert code == 0 and out.strip() == "(1+t+t^2) e_{3} + (t) e_{2,1}"
    code, out2, _ = run(capsys, "qcsf", "--m", "2,3", "--basis", "e", "--method", "tableaux")
    assert out2 == out


def test_check_e_positive_net(capsys):
    code, out, _ = run(capsys, "check", "e-positive", "--family", "net", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert data["command"] == "check" and data["result"]["verdict"] == "not-e-positive"
    assert [w["partition"] for w in data["result"]["witnesses"]] == [[5, 3]]


def test_check_positive_graph_file(tmp_path, capsys):
    f = tmp_path / "k3.json"
    f.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}))
    code, out, _ = run(capsys, "check", "e-positive", "--graph", str(f))
    assert code == 0 and "e-positive" in out


def test_graph_from_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO('{"n": 3, "edges": [[1,2],[2,3]]}'))
    code, out, _ = run(capsys, "graph", "--graph", "-", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["result"]["interval_sequence"] == [2, 3]


def test_graph_families(capsys):
    code, out, _ = run(capsys, "graph", "--family", "gspider", "--n", "3", "--legs", "2,1,0",
                       "--format", "json")
    assert code == 0 and json.loads(out)["result"]["n"] == 6
    code, out, _ = run(capsys, "graph", "--family", "hcrab", "--m", "2,4,6,8^4", "--format", "json")
    assert json.loads(out)["result"]["interval_sequence"] == [2, 4, 6, 8, 8, 8, 8]
    code, out, _ = run(capsys, "graph", "--family", "tail", "--m1", "2", "--m2", "3", "--n", "6",
                       "--repeat", "2", "--format", "json")
    assert json.loads(out)["result"]["interval_sequence"] == [2, 3, 5, 5, 6]


def test_json_is_deterministic(capsys):
    argv = ["qcsf", "--m", "2,4,5,5", "--format", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    data = json.loads(a)
    assert set(data) == {"command", "input", "result"}
    assert all(isinstance(c, str) for t in data["result"]["terms"] for c in t["coeff"])


def test_tableaux_listing(capsys):
    code, out, _ = run(capsys, "tableaux", "--m", "2,3", "--shape", "2,1")
    assert code == 0 and "1 3 / 2  inv=1" in out
    code, out, _ = run(capsys, "tableaux", "--m", "2,3", "--format", "json")
    shapes = [entry["shape"] for entry in json.loads(out)["result"]]
    assert shapes == [[2, 1], [1, 1, 1]]


def test_injections_exit_codes(capsys):
    code, out, _ = run(capsys, "injections", "--m", "2,4,6,8,8,8,8", "--map", "psi", "--report", "json")
    assert code == 0 and json.loads(out)["result"]["ok"]
    code, out, _ = run(capsys, "injections", "--m", "2,4,6,8,8,8,8", "--map", "xi", "--variant", "literal")
    assert code == 1 and "invalid_targets" in out


def test_net_formula_and_uniqueness(capsys):
    code, out, _ = run(capsys, "net-formula", "--n", "4", "--verify")
    assert code == 0 and "- 6 e_{4,3}" in out and "True" in out
    code, out, _ = run(capsys, "uniqueness", "--family", "gspider", "--max-vertices", "7", "--report", "json")
    assert code == 0 and json.loads(out)["result"]["ok"]


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["csf"],
    ["csf", "--family", "net"],
    ["qcsf", "--m", "2,9"],
    ["qcsf", "--family", "claw"],
    ["csf", "--family", "hcrab", "--m", "3,3,4"],
    ["tableaux", "--m", "2,3", "--shape", "1,2"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_vertex_cap(capsys):
    code, _, err = run(capsys, "--max-n", "5", "csf", "--family", "complete", "--n", "6")
    assert code == 2 and "exceeds the configured cap of 5" in err


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "1,10")
    assert code == 0 and "2/2 criteria passed" in out

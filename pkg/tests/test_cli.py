import json

import pytest

from knotamp.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cnot_file(tmp_path):
    path = tmp_path / "cnot.json"
    rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    entries = [[[0, 1, 0]] if v else [] for row in rows for v in row]
    path.write_text(json.dumps({"shape": [4, 4], "kind": "exact", "entries": entries}))
    return path


def test_swap_hopf(capsys):
    code, out, _ = _run(capsys, "eval", "--model", "swapfg", "--braid", "2: s1 s1", "--closed")
    assert code == 0 and out.strip() == "1"


def test_bracket_circle(capsys):
    code, out, _ = _run(capsys, "eval", "--model", "bracket", "--braid", "1:", "--closed")
    assert code == 0 and out.strip() == "-A^2 + -A^-2"


def test_entangle_cnot(capsys, cnot_file):
    code, out, _ = _run(capsys, "entangle", "--matrix", str(cnot_file))
    assert code == 0
    assert out.startswith("entangling")
    assert "witness" in out
    code, out, _ = _run(capsys, "entangle", "--matrix", str(cnot_file), "--out", "json")
    assert json.loads(out)["entangling"] is True


def test_entangle_model_default(capsys):
    code, out, _ = _run(capsys, "entangle", "--model", "bracket", "--theta", "1.5707963267948966")
    assert code == 0 and out.startswith("not entangling")


def test_eval_json_and_normalize(capsys):
    code, out, _ = _run(capsys, "eval", "--braid", "2: s1 s1 s1", "--closed", "--normalize", "--out", "json")
    payload = json.loads(out)
    assert code == 0 and payload["normalized"] and payload["writhe"] == 3
    code, out, _ = _run(capsys, "oracle", "--braid", "2: s1 s1 s1", "--closed", "--normalize", "--out", "json")
    assert json.loads(out)["value"] == payload["value"]["value"]


def test_exit_codes(capsys):
    code, _, err = _run(capsys, "eval", "--braid", "2: s3", "--closed")
    assert code == 2 and json.loads(err)["error"]["kind"] == "parse"
    code, _, err = _run(capsys, "eval", "--model", "swapfg", "--braid", "2: s1", "--closed", "--normalize")
    assert code == 3 and json.loads(err)["error"]["code"] == 3
    code, _, _ = _run(capsys, "jones3", "--braid", "3: s1", "--theta", "0.7")
    assert code == 3
    code, _, _ = _run(capsys, "nosuch")
    assert code == 2


def test_seed_required(capsys):
    assert _run(capsys, "parity", "--samples", "3")[0] == 2
    assert _run(capsys, "moves", "--braid", "2: s1", "--closed")[0] == 2


def test_sampling_is_deterministic(capsys):
    argv = ("parity", "--seed", "4", "--samples", "40", "--out", "json")
    first = _run(capsys, *argv)[1]
    assert first == _run(capsys, *argv)[1]
    assert json.loads(first)["failures"] == 0
    assert _run(capsys, *argv, "--jobs", "2")[1] == first
    argv = ("moves", "--braid", "3: s1 s2^-1 s1", "--closed", "--seed", "7", "--out", "json")
    first = _run(capsys, *argv)[1]
    assert first == _run(capsys, *argv)[1]
    assert json.loads(first)["unchanged"] is True


def test_jones3_report(capsys):
    code, out, _ = _run(capsys, "jones3", "--braid", "3: s1 s2^-1", "--theta", "1.2", "--report", "--out", "json")
    payload = json.loads(out)
    assert code == 0 and payload["difference"] < 1e-9
    assert payload["unitary"]["s2"] is True


def test_ybe_model_and_matrix(capsys, tmp_path):
    code, out, _ = _run(capsys, "ybe", "--model", "virtual")
    assert code == 0 and "fail" not in out
    code, out, _ = _run(capsys, "ybe", "--model", "product", "--s-exponent", "1", "--out", "json")
    assert json.loads(out)["passed"] is False

import io
import json
import sys

import pytest

from leonard.cli import main
from leonard.jsonio import array_from_json, array_to_json, dumps, matrix_from_json, matrix_to_json
from leonard.selftest import INVARIANTS, run_selftest

KRAW2_DOC = {
    "d": 2,
    "field": {"kind": "rational"},
    "theta": ["2", "0", "-2"],
    "theta_star": ["2", "0", "-2"],
    "varphi": ["-4", "-4"],
    "phi": ["4", "4"],
}
QQ_DOC = {"kind": "rational"}


def run(monkeypatch, capsys, argv, stdin=None):
    if stdin is not None:
        text = stdin if isinstance(stdin, str) else json.dumps(stdin)
        monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_example_krawtchouk(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["example", "--family", "krawtchouk", "--d", "2"])
    assert code == 0
    assert json.loads(out) == KRAW2_DOC


def test_example_qracah_and_errors(monkeypatch, capsys):
    argv = ["example", "--family", "qracah", "--d", "0", "--q", "2", "--s", "1", "--s-star", "1", "--r1", "1", "--r2", "2"]
    code, out, _ = run(monkeypatch, capsys, argv)
    assert code == 0 and json.loads(out)["theta"] == ["3"]
    argv[argv.index("--q") + 1] = "1"
    code, _, err = run(monkeypatch, capsys, argv + ["--d", "2"])
    assert code == 3 and json.loads(err)["reason"] == "ConstraintViolated"
    code, _, err = run(monkeypatch, capsys, ["example", "--family", "krawtchouk", "--d", "4", "--prime", "3"])
    assert code == 3
    code, _, _ = run(monkeypatch, capsys, ["example", "--family", "krawtchouk", "--d", "2", "--prime", "15"])
    assert code == 3
    code, _, _ = run(monkeypatch, capsys, ["example", "--family", "qracah", "--d", "2"])
    assert code == 2


def test_validate_exit_codes(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["validate"], KRAW2_DOC)
    assert code == 0 and json.loads(out)["valid"]
    bad = dict(KRAW2_DOC, varphi=["0", "-4"])
    code, out, _ = run(monkeypatch, capsys, ["validate"], bad)
    report = json.loads(out)
    assert code == 1 and report["violations"][0]["condition"] == "I"
    code, _, _ = run(monkeypatch, capsys, ["validate"], "{not json")
    assert code == 2
    code, _, _ = run(monkeypatch, capsys, ["validate"], dict(KRAW2_DOC, theta=[2, 0, -2]))
    assert code == 2
    code, _, _ = run(monkeypatch, capsys, ["validate"], dict(KRAW2_DOC, field={"kind": "prime", "p": 9}))
    assert code == 3


def test_recognize(monkeypatch, capsys):
    doc = {
        "a": {"field": QQ_DOC, "entries": [["0", "2", "0"], ["1", "0", "1"], ["0", "2", "0"]]},
        "a_star": {"field": QQ_DOC, "entries": [["2", "0", "0"], ["0", "0", "0"], ["0", "0", "-2"]]},
    }
    code, out, _ = run(monkeypatch, capsys, ["recognize", "--shape", "tdd"], doc)
    rep = json.loads(out)
    assert code == 0 and rep["accepted"] and len(rep["arrays"]) == 2
    assert rep["arrays"][0]["theta"] == ["2", "0", "-2"]
    doc["a"]["entries"][0][1] = "3"
    code, out, _ = run(monkeypatch, capsys, ["recognize", "--shape", "tdd"], doc)
    assert code == 1 and json.loads(out)["reject_reason"] == "QuadraticNoRootsInField"
    code, _, _ = run(monkeypatch, capsys, ["recognize", "--shape", "tdd"], {"a": doc["a"]})
    assert code == 2
    doc["a_star"]["field"] = {"kind": "prime", "p": 5}
    code, _, _ = run(monkeypatch, capsys, ["recognize", "--shape", "tdd"], doc)
    assert code == 2


def test_canon_orbit_transition(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["canon", "--form", "tdd"], KRAW2_DOC)
    assert code == 0 and json.loads(out)["a"]["entries"] == [["0", "2", "0"], ["1", "0", "1"], ["0", "2", "0"]]
    code, out, _ = run(monkeypatch, capsys, ["orbit"], KRAW2_DOC)
    assert code == 0 and len(json.loads(out)["arrays"]) == 4
    code, out, _ = run(monkeypatch, capsys, ["transition"], KRAW2_DOC)
    t = json.loads(out)
    assert code == 0 and t["nu"] == "4" and t["k"] == ["1", "2", "1"]
    bad = dict(KRAW2_DOC, varphi=["0", "-4"])
    code, _, err = run(monkeypatch, capsys, ["canon", "--form", "lbub"], bad)
    assert code == 1 and json.loads(err)["reason"] == "InvalidInput"


def test_bad_arguments(monkeypatch, capsys):
    code, _, _ = run(monkeypatch, capsys, ["canon", "--form", "zz"], KRAW2_DOC)
    assert code == 2
    code, _, _ = run(monkeypatch, capsys, ["validate", "--in", "/nonexistent/file.json"])
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["example", "--family", "krawtchouk", "--d", "3"],
        ["example", "--family", "krawtchouk", "--d", "3", "--prime", "13"],
        ["example", "--family", "qracah", "--d", "2", "--q", "2", "--s", "3", "--s-star", "5", "--r1", "7", "--r2", "120/7"],
    ],
)
def test_roundtrip_byte_identical(monkeypatch, capsys, argv, tmp_path):
    _, first, _ = run(monkeypatch, capsys, argv)
    assert dumps(array_to_json(array_from_json(json.loads(first)))) == first
    # the first orbit entry is the input array itself, written back out
    path = tmp_path / "p.json"
    path.write_text(first)
    run(monkeypatch, capsys, ["orbit", "--in", str(path), "--out", str(tmp_path / "o.json")])
    arr = json.loads((tmp_path / "o.json").read_text())["arrays"][0]
    assert dumps(arr) == first
    _, canon, _ = run(monkeypatch, capsys, ["canon", "--form", "tdd", "--in", str(path)])
    a = json.loads(canon)["a"]
    assert dumps(matrix_to_json(matrix_from_json(a))) == dumps(a)


def test_selftest(monkeypatch, capsys):
    code, out, err = run(monkeypatch, capsys, ["selftest"])
    assert code == 0 and json.loads(out)["ok"]
    assert err.count("PASS") == len(INVARIANTS)
    code, out, err = run(monkeypatch, capsys, ["selftest", "--corrupt"])
    assert code == 1 and "FAIL" in err


def test_selftest_results():
    results = run_selftest()
    assert all(r.ok for r in results)
    assert {r.name for r in results} == set(INVARIANTS)
    assert not all(r.ok for r in run_selftest(corrupt=True))

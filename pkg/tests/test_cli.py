import json

import pytest

from a22crystal.adjoint import LambdaSpec
from a22crystal.cli import main, parse_ops, UsageError
from a22crystal.crystal import CrystalGraph
from a22crystal.youngwall import Column, Wall

from figure_data import MINIMAL, ONE_ARROWS, ZERO_ARROWS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_crystal_json_level4(capsys):
    code, out, _ = run(capsys, "crystal", "--level", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["nodes"]) == 15
    assert data["minimal_vectors"] == ["(0,0)", "(1,1)", "(2,2)"]
    g = CrystalGraph.from_json(data)
    edges = {(s, i, d) for s, i, d in g.edges}
    want = {(f"({a},{b})", 1, f"({c},{d})") for (a, b), (c, d) in ONE_ARROWS}
    want |= {(f"({a},{b})", 0, f"({c},{d})") for (a, b), (c, d) in ZERO_ARROWS}
    assert edges == want
    assert len(MINIMAL) == 3


def test_crystal_dot_and_table(capsys):
    code, out, _ = run(capsys, "crystal", "--level", "1")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "crystal", "--level", "1", "--format", "table")
    assert code == 0 and out.startswith("level 1: 3 elements")


def test_crystal_level_zero_rejected(capsys):
    code, _, err = run(capsys, "crystal", "--level", "0")
    assert code == 2 and "positive" in err


def test_walls_depth(capsys):
    code, out, _ = run(capsys, "walls", "--lambda", "4,1", "--depth", "0", "--reduced-only", "--format", "json")
    assert code == 0 and list(json.loads(out)["walls"]) == ["ground"]
    for lam in ("4,1", "inf"):
        code, out, _ = run(capsys, "walls", "--lambda", lam, "--depth", "1", "--reduced-only", "--format", "json")
        data = json.loads(out)
        assert code == 0 and len(data["walls"]) == 3
        assert sorted(i for s, i, d in data["edges"] if s == 0) == [0, 1]
        assert data["nodes"][0]["label"] == "ground"


def test_walls_table_and_ascii(capsys):
    code, out, _ = run(capsys, "walls", "--lambda", "2,1", "--depth", "2")
    assert code == 0 and "total nodes" in out
    code, out, _ = run(capsys, "walls", "--lambda", "2,1", "--depth", "1", "--format", "ascii")
    assert code == 0 and "C0" in out


def test_walls_bad_lambda(capsys):
    assert run(capsys, "walls", "--lambda", "2,5")[0] == 2
    assert run(capsys, "walls", "--lambda", "x")[0] == 2


def test_act_on_example_wall(capsys, tmp_path):
    y = Wall(LambdaSpec(4, 1), (Column(7, 5, 6, 4), Column(3, 7, 8, 4)))
    f = tmp_path / "y.json"
    f.write_text(y.dumps(), encoding="utf-8")
    code, out, _ = run(capsys, "act", str(f), "F0", "--format", "json")
    assert code == 0
    res = Wall.from_json(json.loads(out)["result"])
    assert res.column(1) == Column(4, 0, 0, 4)
    code, out, _ = run(capsys, "act", str(f), "E1", "--format", "json", "--method", "oracle")
    assert Wall.from_json(json.loads(out)["result"]).column(0) == Column(7, 3, 2, 4)
    code, out, _ = run(capsys, "act", str(f), "F0 E0")
    assert code == 0 and "⟨7,5,6⟩" in out


def test_act_null(capsys):
    code, out, _ = run(capsys, "act", "E0", "--lambda", "4,1")
    assert code == 0 and out.startswith("null")
    code, out, _ = run(capsys, "act", "E0", "--lambda", "4,1", "--format", "json")
    assert json.loads(out)["result"] is None


def test_act_usage_errors(capsys):
    assert run(capsys, "act", "F2", "--lambda", "4,1")[0] == 2
    assert run(capsys, "act", "F0")[0] == 2
    assert run(capsys, "act", "/nonexistent.json", "F0")[0] == 2


def test_parse_ops():
    assert parse_ops("F0 f1,E0") == [("F", 0), ("F", 1), ("E", 0)]
    with pytest.raises(UsageError):
        parse_ops("X0")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "perfect", "--level", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"] is True
    code, out, _ = run(capsys, "verify", "energy-axioms", "--level", "5")
    assert code == 0 and out.strip().endswith("PASS")


def test_verify_iso_small(capsys):
    code, out, _ = run(capsys, "verify", "iso-lambda", "--lambda", "2,1", "--depth", "4")
    assert code == 0


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "walls", "--lambda", "4,1", "--depth", "6", "--reduced-only", "--cap", "5")
    assert code == 3 and "cap" in err


def test_jobs_flag_same_output(capsys):
    base = ["walls", "--lambda", "3,1", "--depth", "4", "--reduced-only", "--format", "json"]
    _, a, _ = run(capsys, *base)
    _, b, _ = run(capsys, *base, "--jobs", "2")
    assert a == b


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_act_separate_operator_tokens(capsys):
    code, a, _ = run(capsys, "act", "F1", "F0", "--lambda", "2,1", "--format", "json")
    code2, b, _ = run(capsys, "act", "F1 F0", "--lambda", "2,1", "--format", "json")
    assert code == code2 == 0 and a == b
    assert json.loads(a)["result"]["columns"] == [{"s": 1, "sbar": 3, "tbar": 4}]

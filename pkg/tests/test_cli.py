"""CLI surface: outputs, formats, exit codes."""

import json

import pytest

import zeuthen.cli as cli
from zeuthen import IntegralityFailure
from zeuthen.verify import CheckResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_charnum_text(capsys):
    code, out, _ = run(capsys, "charnum", "-d", "2", "-k", "0", "--tangencies", "2^5")
    assert code == 0 and out.strip() == "3264"
    code, out, _ = run(capsys, "charnum", "-d", "3", "-k", "1", "--tangencies", "1^7")
    assert code == 0 and out.strip() == "600"
    code, out, _ = run(capsys, "charnum", "-d", "1", "-k", "2")
    assert code == 0 and out.strip() == "1"


def test_charnum_tangency_syntax(capsys):
    code, out, _ = run(capsys, "charnum", "-d", "2", "-k", "3", "--tangencies", "1,1")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "charnum", "-d", "2", "-k", "2", "--tangencies", "2,1^2")
    assert code == 0


def test_charnum_json(capsys):
    code, out, _ = run(
        capsys, "charnum", "-d", "2", "-k", "0", "--tangencies", "2^5", "--format", "json"
    )
    assert code == 0
    document = json.loads(out)
    assert document["schema"] == "1"
    assert document["request"]["tangencies"] == [2, 2, 2, 2, 2]
    assert document["value"] == "3264"


def test_diagrams_text(capsys):
    code, out, _ = run(capsys, "diagrams", "-d", "2", "--lcomb", "4,5")
    assert code == 0
    assert out.count("diagram ") == 5
    assert out.strip().endswith("total 4")


def test_diagrams_json_schema(capsys):
    code, out, _ = run(capsys, "diagrams", "-d", "1", "--lcomb", "", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["schema"] == "1"
    assert document["degree"] == 1 and document["lcomb"] == []
    assert document["total"] == "1"
    (record,) = document["diagrams"]
    assert record["vertices"] == [
        {"id": 0, "color": "white", "div": 1},
        {"id": 1, "color": "black", "div": -1},
    ]
    assert record["edges"] == [{"white": 0, "black": 1, "weight": 1, "orientation": "to_white"}]
    assert record["markings"] == [{"assignment": [1, 0], "multiplicity": "1"}]


def test_diagrams_json_deterministic(capsys):
    first = run(capsys, "diagrams", "-d", "2", "--lcomb", "4,5", "--format", "json")
    second = run(capsys, "diagrams", "-d", "2", "--lcomb", "4,5", "--format", "json")
    assert first == second


def test_diagrams_dot(capsys):
    code, out, _ = run(capsys, "diagrams", "-d", "2", "--format", "dot")
    assert code == 0
    assert out.count("digraph") == 5
    assert "shape=circle" in out and "shape=point" in out
    assert 'label="2"' in out  # the weight-2 elevator appears somewhere


def test_hurwitz_outputs(capsys):
    code, out, _ = run(capsys, "hurwitz", "--closed", "3")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "hurwitz", "--delta", "2,0", "--branch", "1,0")
    assert code == 0 and out.strip() == "1/2"
    code, out, _ = run(capsys, "hurwitz", "--delta", "0,5,0", "--branch", "0,0,0")
    assert code == 0 and out.strip() == "1/5"


def test_hurwitz_covers(capsys):
    code, out, _ = run(capsys, "hurwitz", "--delta", "3,0", "--branch", "2,0", "--covers")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "1"
    assert len(lines) == 2 and "muH 2, autOrder 2" in lines[1]

    code, out, _ = run(
        capsys, "hurwitz", "--delta", "2,0", "--branch", "1,0", "--covers", "--format", "json"
    )
    document = json.loads(out)
    assert document["value"] == "1/2"
    (cover,) = document["covers"]
    assert cover["mu"] == "1" and cover["aut_order"] == 2

    # infeasible problems have value 0 and no covers
    code, out, _ = run(
        capsys, "hurwitz", "--delta", "2,2", "--branch", "1,1", "--covers", "--format", "json"
    )
    assert code == 0
    document = json.loads(out)
    assert document["value"] == "0" and document["covers"] == []


def test_usage_errors(capsys):
    code, _, err = run(capsys, "charnum", "-d", "2", "-k", "1", "--tangencies", "2")
    assert code == 2 and "k + #tangencies" in err
    code, _, err = run(capsys, "charnum", "-d", "2", "-k", "0", "--tangencies", "x^2")
    assert code == 2
    code, _, err = run(capsys, "hurwitz", "--closed", "2", "--delta", "1,0")
    assert code == 2
    code, _, err = run(capsys, "hurwitz")
    assert code == 2
    code, _, err = run(capsys, "diagrams", "-d", "2", "--lcomb", "9")
    assert code == 2
    code, _, err = run(capsys, "diagrams", "-d", "0")
    assert code == 2


def test_internal_inconsistency_exit_code(capsys, monkeypatch):
    def boom(problem):
        raise IntegralityFailure("non-integral total")

    monkeypatch.setattr(cli, "characteristic_number", boom)
    code, _, err = run(capsys, "charnum", "-d", "1", "-k", "2")
    assert code == 3 and "internal inconsistency" in err


def test_verify_exit_codes(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_suite", lambda name, jobs=1: [CheckResult("stub", True)])
    code, out, _ = run(capsys, "verify", "--suite", "paper")
    assert code == 0 and "ok   stub" in out

    monkeypatch.setattr(
        cli,
        "run_suite",
        lambda name, jobs=1: [CheckResult("stub", False, "expected 1, computed 2")],
    )
    code, out, _ = run(capsys, "verify", "--suite", "paper")
    assert code == 1 and "FAIL stub: expected 1, computed 2" in out

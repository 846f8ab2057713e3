import csv
import io
import json
import os
import subprocess
import sys

import pytest

from ksl.cli import main, parse_int_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_usage(capsys, *argv):
    # argparse signals usage errors through SystemExit
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_text_and_json(capsys):
    code, out, _ = run(capsys, "invariants", "T(2,3)", "--format", "json")
    assert code == 0
    row = json.loads(out)
    assert (row["genus"], row["alexander"], row["ddHalf"], row["signature"]) == (1, "t - 1 + t^-1", 1, -2)
    code, out, _ = run(capsys, "invariants", " T( 1 , 5 ) ")
    assert code == 0 and "genus      0" in out and "alexander  1" in out


@pytest.mark.parametrize("desc", ["T(2,4)", "T(2,3", "K(2,3)", "T(0,1)"])
def test_invariants_bad_descriptor(capsys, desc):
    code, _, err = run(capsys, "invariants", desc)
    assert code == 2 and "error" in err


@pytest.mark.parametrize(
    "knot,slope,expected",
    [("T(4,5)", "21", "L(21,4)"), ("T(2,3)", "6", "L(2,·)#L(3,·)"), ("T(3,4)", "5", "SmallSeifert"),
     ("T(2,3)", "11/2", "Lens")],
)
def test_surgery(capsys, knot, slope, expected):
    code, out, _ = run(capsys, "surgery", knot, slope)
    assert code == 0 and out.strip() == expected


@pytest.mark.parametrize("argv", [("T(2,3)", "0"), ("T(1,3)", "5"), ("T(2,3)", "x"), ("T(2,3)", "1/0")])
def test_surgery_usage_errors(capsys, argv):
    code, _, _ = run(capsys, "surgery", *argv)
    assert code == 2


def test_pairs_csv(capsys):
    code, out, _ = run(capsys, "pairs", "--k", "1", "--n", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "n", "a", "b", "c", "d", "p", "lens1", "lens2", "genus1", "genus2", "ddHalf", "verified"]
    assert rows[1] == ["1", "2", "4", "5", "2", "11", "21", "L(21,4)", "L(21,16)", "6", "5", "15", "true"]
    assert out.splitlines()[1].startswith("1,2,4,5,2,11,21,")
    assert out.splitlines()[1].endswith(",6,5,15,true")


def test_pairs_json_range(capsys):
    code, out, _ = run(capsys, "pairs", "--k", "3", "--n", "2..4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [2, 3, 4] and all(r["verified"] is True for r in rows)


def test_pairs_degenerate(capsys):
    code, _, err = run(capsys, "pairs", "--k", "1", "--n", "1")
    assert code == 2 and "degenerate" in err
    code, _, _ = run(capsys, "pairs", "--k", "0", "--n", "2")
    assert code == 2


def test_int_list_parsing():
    assert parse_int_list(["2..4", "7"]) == [2, 3, 4, 7]


@pytest.mark.parametrize(
    "genus,mode,expected",
    [("3", "count", "2"), ("2", "extremal", "max 3 at [2,0]"), ("5", "collisions", "none"),
     ("3", "list", "[3,1,-1]\n[3,0,-1]")],
)
def test_staircases(capsys, genus, mode, expected):
    code, out, _ = run(capsys, "staircases", "--genus", genus, "--mode", mode)
    assert code == 0 and out.strip() == expected


def test_staircases_json_note(capsys):
    code, out, _ = run(capsys, "staircases", "--genus", "4", "--mode", "count", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["count"] == 3 and "realizab" in obj["note"]


def test_staircases_usage(capsys):
    assert run_usage(capsys, "staircases", "--genus", "3", "--mode", "bogus")[0] == 2
    assert run_usage(capsys, "staircases", "--genus", "0")[0] == 2


def test_verify_appendix(capsys):
    code, out, err = run(capsys, "verify", "--scope", "appendix")
    rep = json.loads(out)
    assert code == 0
    assert rep["schema_version"] == 1
    assert rep["summary"]["total"] >= 25 and rep["summary"]["failed"] == 0
    assert all(c["anchor"] and c["status"] in ("pass", "fail") for c in rep["checks"])
    assert "checks passed" in err


def test_verify_unknown_scope(capsys):
    assert run_usage(capsys, "verify", "--scope", "nope")[0] == 2


def test_no_subcommand(capsys):
    assert run_usage(capsys)[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from ksl import verify
    from ksl.pairsgen import Check

    monkeypatch.setitem(verify.SUITES, "surgery", lambda: [("broken", lambda: Check("broken", "d", "a", False))])
    code, out, _ = run(capsys, "verify", "--scope", "surgery")
    assert code == 1 and json.loads(out)["summary"]["failed"] == 1


def test_json_is_deterministic(capsys):
    first = run(capsys, "verify", "--scope", "all")[1]
    second = run(capsys, "verify", "--scope", "all")[1]
    assert first == second
    a = run(capsys, "pairs", "--k", "1..2", "--n", "2..3", "--format", "json")[1]
    b = run(capsys, "pairs", "--k", "1..2", "--n", "2..3", "--format", "json")[1]
    assert a == b


def test_module_entry_point_and_threads():
    env = {**os.environ, "KSL_THREADS": "1"}
    proc = subprocess.run(
        [sys.executable, "-m", "ksl", "surgery", "T(4,5)", "21"], capture_output=True, text=True, env=env
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "L(21,4)"

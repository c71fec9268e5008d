import json
import subprocess
import sys
from pathlib import Path

import pytest

from ffrob import ParseError, PolyRing, PrimeField, parse_polynomial
from ffrob.cli import parse_session, run_session

SESSIONS = Path(__file__).resolve().parent.parent / "sessions"

F5 = PrimeField(5)
R5 = PolyRing(F5, ("x", "y"))


def test_parse_polynomial_examples():
    f = parse_polynomial("x^2*y + 3", R5)
    assert [(m, c) for m, c in f.terms] == [((2, 1), 1), ((0, 0), 3)]
    R2 = PolyRing(PrimeField(2), ("x",))
    assert parse_polynomial("x + x", R2).is_zero
    assert parse_polynomial("2*x - 7", R5) == parse_polynomial("2*x + 3", R5)
    assert parse_polynomial("(x+y)^2", R5) == parse_polynomial(
        "x^2 + 2*x*y + y^2", R5
    )


@pytest.mark.parametrize("bad", ["x^", "z", "x^0", "x^-2", "x ++", "", "x)"])
def test_parse_polynomial_errors(bad):
    with pytest.raises(ParseError):
        parse_polynomial(bad, R5)


def test_parse_round_trip():
    for text in ("x^2*y + 3", "x*y + 4*x + 1", "x^3 + 2*y^3"):
        f = parse_polynomial(text, R5)
        assert parse_polynomial(str(f), R5) == f


COUNTEREXAMPLE_SESSION = """\
ring p=2 vars=x,y,z,w quotient=[x^3, x^2*z + y^2*w, x*y, y^3]
ideal I = [x]
ideal J = [y]
check2 I J 1
"""


def test_parse_session_counterexample():
    spec = parse_session(COUNTEREXAMPLE_SESSION)
    assert len(spec.ring.quotient_gens) == 4
    assert set(spec.ideals) == {"I", "J"}
    assert len(spec.commands) == 1


def test_parse_session_dual_numbers():
    spec = parse_session("ring p=2 vars=x quotient=[x^2]\nreduced\n")
    assert spec.ring.describe() == "F_2[x]/(x^2)"


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("ring p=4 vars=x\n", "not prime"),
        ("ideal I = [x]\n", "ring must be declared first"),
        ("ring p=2 vars=x\nideal I = [x]\nideal I = [x]\n", "duplicate name"),
        ("ring p=2 vars=x\ncheck3 I u 1\n", "unknown ideal"),
        ("ring p=2 vars=x\nprobe --bogus 3\n", "invalid flag"),
        ("ring p=2 vars=x\nring p=3 vars=y\n", "duplicate ring"),
        ("ring p=2 vars=x\nfrobboot\n", "unknown command"),
    ],
)
def test_parse_session_errors_carry_line_numbers(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_session(text)
    assert fragment in str(err.value)


def test_run_session_exit_codes():
    spec = parse_session(COUNTEREXAMPLE_SESSION)
    reports, code = run_session(spec, {})
    assert code == 2
    assert reports[0]["outcome"] == "FAIL"
    assert reports[0]["witness"]["separator"] == "x^2*z"

    ok_spec = parse_session("ring p=2 vars=x quotient=[x^2]\nreduced\n")
    reports, code = run_session(ok_spec, {})
    assert code == 0
    assert reports[0]["result"] is False


def test_bracket_zero_prints_input_unchanged():
    spec = parse_session("ring p=2 vars=x,y\nideal I = [x^2+y]\nbracket I 0\ngb I\n")
    reports, _ = run_session(spec, {})
    assert reports[0]["result"] == reports[1]["result"]


def _run_cli(args):
    return subprocess.run(
        [sys.executable, "-m", "ffrob.cli", *args],
        capture_output=True,
        text=True,
    )


def test_cli_corpus_exit_codes():
    assert _run_cli([str(SESSIONS / "dualnumbers.ffor")]).returncode == 0
    assert _run_cli([str(SESSIONS / "polyring.ffor")]).returncode == 0
    assert _run_cli([str(SESSIONS / "cusp.ffor")]).returncode == 2
    assert _run_cli([str(SESSIONS / "counterexample_p2.ffor")]).returncode == 2
    missing = _run_cli(["no-such-session.ffor"])
    assert missing.returncode == 1
    assert "error" in missing.stderr


def test_cli_json_deterministic():
    runs = [
        _run_cli([str(SESSIONS / "cusp.ffor"), "--json", "--seed", "1"])
        for _ in range(2)
    ]
    assert runs[0].stdout == runs[1].stdout
    reports = json.loads(runs[0].stdout)
    for rep in reports:
        assert "command" in rep
        if rep.get("outcome") == "FAIL":
            assert set(rep["witness"]) >= {"I", "x", "e", "separator", "side"}


def test_cli_json_reparse_round_trip():
    out = _run_cli([str(SESSIONS / "polyring.ffor"), "--json"])
    reports = json.loads(out.stdout)
    ring = parse_session("ring p=2 vars=x,y\n").ring
    by_cmd = {r["command"]: r for r in reports}
    original = ring.ideal([parse_polynomial(s, ring.ambient) for s in ("x^2+y", "x*y")])
    reparsed = ring.ideal(
        [parse_polynomial(s, ring.ambient) for s in by_cmd["gb"]["result"]]
    )
    assert reparsed == original

import io
import json
import subprocess
import sys

import pytest

from twistorcheck.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from twistorcheck.exterior import exterior_derivative, gen
from twistorcheck.syntax import evaluate, parse


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


TORUS = ("--b1", "4", "--bplus", "3", "--bminus", "3")


# -- verify ------------------------------------------------------------------------------

def test_verify_single_check_with_trace():
    code, text = run("verify", "--check", "C11")
    assert code == EXIT_OK
    assert "PASS" in text and "h21=0 => kernel dim must be 2, but equals b-+1=1" in text


def test_verify_unknown_check(capsys):
    code, _ = run("verify", "--check", "C99")
    assert code == EXIT_USAGE
    assert "unknown check" in capsys.readouterr().err


def test_verify_needs_a_selection(capsys):
    assert run("verify")[0] == EXIT_USAGE


def test_verify_failing_check_exits_one():
    code, text = run("verify", "--check", "C5")
    assert code == EXIT_FAIL
    assert "FAIL" in text and "witness:" in text


def test_verify_json_schema():
    code, text = run("verify", "--check", "C1", "--check", "C11", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["command"] == "verify"
    assert payload["inputs"] == {"checks": ["C1", "C11"]}
    for r in payload["results"]:
        assert {"name", "paper", "status", "witness"} <= set(r)
        assert r["status"] == "pass" and r["witness"] is None


def test_verify_json_byte_identical():
    assert run("verify", "--check", "C2", "--format", "json") == run("verify", "--check", "C2", "--format", "json")


# -- diamonds --------------------------------------------------------------------------

def test_diamond_bc_torus():
    code, text = run("diamond", "--kind", "bc", *TORUS)
    assert code == EXIT_OK
    assert "unknowns: h11, h12, h21, h22" in text
    rows = text.splitlines()[1:8]
    assert rows[4].split() == ["3", "h22", "3"] and rows[5].split() == ["4", "4"]


def test_diamond_betti_s4():
    code, text = run("diamond", "--kind", "betti", "--b1", "0", "--bplus", "0", "--bminus", "0")
    assert code == EXIT_OK and "b0=1  b1=0  b2=1  b3=0  b4=1  b5=0  b6=1" in text


def test_diamond_hodge_template():
    code, text = run("diamond", "--kind", "hodge", "--b1", "1", "--bplus", "0", "--bminus", "0", "--format", "json")
    entries = {(e["p"], e["q"]): e for e in json.loads(text)["entries"]}
    assert entries[(0, 1)]["value"] == 1 and entries[(0, 2)]["value"] == 0
    assert entries[(1, 1)] == {"p": 1, "q": 1, "value": None, "symbol": "h11"}


def test_diamond_json_schema_and_stability():
    args = ("diamond", "--kind", "aeppli", *TORUS, "--h11bc", "4", "--h11a", "5", "--h12bc", "4", "--format", "json")
    first, second = run(*args), run(*args)
    assert first == second
    payload = json.loads(first[1])
    assert payload["kind"] == "aeppli" and len(payload["entries"]) == 16
    assert all(set(e) == {"p", "q", "value", "symbol"} for e in payload["entries"])


@pytest.mark.parametrize("bad", [["--b1", "-1"], ["--b1", "x"]])
def test_malformed_flags(bad, capsys):
    code, _ = run("diamond", "--kind", "bc", *bad, "--bplus", "0", "--bminus", "0")
    assert code == EXIT_USAGE


# -- ddbar ------------------------------------------------------------------------------

def test_ddbar_torus_no():
    code, text = run("ddbar", *TORUS, "--h11bc", "4", "--h11a", "5", "--mode", "A")
    assert code == EXIT_OK and text.splitlines()[0] == "NO: Delta^2=1"


def test_ddbar_flag_manifold_yes():
    code, text = run("ddbar", "--b1", "0", "--bplus", "1", "--bminus", "0",
                     "--h11bc", "2", "--h11a", "2", "--h12bc", "0", "--mode", "B", "--format", "json")
    r = json.loads(text)["results"][0]
    assert r["summary"] == "YES" and r["flags"] == []
    bc = {(e["p"], e["q"]): e["value"] for e in r["bott_chern"]["entries"]}
    assert bc[(1, 1)] == 2


def test_ddbar_saturated_both_modes():
    base = ("ddbar", "--b1", "0", "--bplus", "0", "--bminus", "0", "--h11bc", "1", "--h11a", "1", "--h12bc", "0")
    for mode in "AB":
        code, text = run(*base, "--mode", mode)
        assert code == EXIT_OK and text.startswith("YES") and "flag" not in text


def test_ddbar_missing_number_named(capsys):
    code, _ = run("ddbar", "--b1", "0", "--bplus", "0", "--bminus", "0", "--h11bc", "1")
    assert code == EXIT_USAGE
    assert "--h11a" in capsys.readouterr().err


# -- eval -------------------------------------------------------------------------------

def test_eval_d_sigma_bar_1():
    code, text = run("eval", "sb1", "--apply", "d")
    assert code == EXIT_OK
    assert text == "(1/(m*mb + 1)) * (-(s2*dmb) - mb * dm*sb1)\n"
    assert evaluate(parse(text.strip())) == exterior_derivative(gen("sb1"))


def test_eval_astar_single_term():
    code, text = run("eval", "m^2 * sb1*sb2", "--apply", "astar", "--metric", "paper", "--format", "json")
    r = json.loads(text)["results"][0]
    assert r["bidegrees"] == [[3, 1]]
    assert list(evaluate(parse(r["value"])).terms) == [(0, 1, 2, 5)]


def test_eval_d_dm_is_zero():
    assert run("eval", "dm", "--apply", "d") == (EXIT_OK, "0\n")


def test_eval_star_needs_metric(capsys):
    assert run("eval", "sb1", "--apply", "star")[0] == EXIT_USAGE
    assert "--metric" in capsys.readouterr().err


def test_eval_parse_error_caret(capsys):
    code, _ = run("eval", "s1^2")
    err = capsys.readouterr().err
    assert code == EXIT_USAGE
    assert "power of a form at column 3" in err and err.rstrip().endswith("s1^2\n  ^")


def test_eval_frames():
    code, text = run("eval", "sb1", "--frame", "dz")
    assert text.strip() == "(1/(m*mb + 1)) * (-dz2 + mb * dzb1)"
    code, text = run("eval", "dz1")
    assert text.strip() == "mb * s1 + sb2"
    code, text = run("eval", "dz1", "--frame", "native")
    assert text.strip() == "dz1"


def test_eval_scalar():
    assert run("eval", "(m*mb + m)/m") == (EXIT_OK, "mb + 1\n")


# -- frolicher and catalog ---------------------------------------------------------------

def test_frolicher_examples():
    code, text = run("frolicher", "--b1", "0", "--bplus", "1", "--bminus", "0", "--regular")
    assert code == EXIT_OK and text.startswith("Contradiction")
    code, text = run("frolicher", "--b1", "1", "--bplus", "0", "--bminus", "0", "--format", "json")
    h = json.loads(text)["results"][0]["hodge_numbers"]
    assert (h["h01"], h["h11"], h["h21"]) == (1, 1, 1)
    code, text = run("frolicher", *TORUS, "--regular")
    assert "h11=4" in text


def test_catalog_listing_and_lookup(capsys):
    code, text = run("catalog")
    assert code == EXIT_OK and "h02_rep_l1l1" in text
    code, text = run("catalog", "--name", "omega_bar_0")
    assert "m * sb1 + sb2" in text
    assert run("catalog", "--name", "nope")[0] == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twistorcheck", "eval", "dm", "--apply", "d"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0\n"


def test_no_subcommand_is_usage_error(capsys):
    assert run()[0] == EXIT_USAGE

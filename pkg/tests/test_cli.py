"""Surface-syntax parsing, rendering round trips and the CLI commands."""
import json

import pytest

from duinv.cli import (main, parse_cyc, parse_matrix, render_cyc,
                       render_matrix)
from duinv.cycnum import CycNum, zeta
from duinv.errors import ParseError
from duinv.matgroup import (Mat2, mat_c, mat_c_minus, mat_d1, mat_s, mat_s1,
                            mat_s2)
from fractions import Fraction


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------

def test_parse_rationals():
    assert parse_cyc("3") == 3
    assert parse_cyc("-2/3") == CycNum.from_rat(Fraction(-2, 3))
    assert parse_cyc(" 1 / 2 ") == CycNum.from_rat(Fraction(1, 2))


def test_parse_roots():
    assert parse_cyc("zeta(5)") == zeta(5)
    assert parse_cyc("i") == zeta(4)
    assert parse_cyc("i^2") == -1
    assert parse_cyc("zeta(8)^-1") == zeta(8, 7)
    assert parse_cyc("-zeta(12)") == -zeta(12)


def test_parse_arithmetic():
    assert parse_cyc("1+zeta(3)+zeta(3)^2") == 0
    assert parse_cyc("2*zeta(4)-i") == zeta(4)
    assert parse_cyc("(1+i)*(1-i)") == 2
    assert parse_cyc("1/2*zeta(3)") == zeta(3) / 2
    assert parse_cyc("-(2-3)") == 1


def test_parse_errors_have_positions():
    with pytest.raises(ParseError):
        parse_cyc("zeta(")
    with pytest.raises(ParseError):
        parse_cyc("1+")
    with pytest.raises(ParseError):
        parse_cyc("1 2")
    try:
        parse_cyc("1+*2")
    except ParseError as exc:
        assert exc.position == 2


def test_parse_matrix_forms():
    assert parse_matrix("[[0,1],[1,0]]") == mat_s()
    assert parse_matrix("[[zeta(8),0],[0,zeta(8)^-1]]") == mat_c(zeta(8))
    assert parse_matrix("[[-zeta(12),0],[0,zeta(12)^-1]]") == mat_c_minus(zeta(12))
    with pytest.raises(ParseError):
        parse_matrix("[[1,0],[0,1]")


def test_render_round_trip():
    corpus = [mat_s(), mat_s1(), mat_s2(), mat_d1(),
              mat_c(zeta(7)), mat_c_minus(zeta(12)),
              Mat2.of(Fraction(1, 2), zeta(3) + 1, -zeta(8), 0)]
    for m in corpus:
        assert parse_matrix(render_matrix(m)) == m


def test_render_cyc_round_trip():
    values = [CycNum.zero(), CycNum.from_rat(Fraction(-3, 7)),
              zeta(5) + zeta(5, 3), 2 * zeta(9) - 1, -zeta(4) / 3]
    for v in values:
        assert parse_cyc(render_cyc(v)) == v


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def test_analyze_q1(capsys):
    code = main(["analyze", "--alpha", "1", "--beta", "1",
                 "--gen", "[[zeta(3),0],[0,zeta(3)^-1]]"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema_version"] == "1"
    assert data["group"]["order"] == 3
    assert data["group"]["label"] == "Q1(n=3)"
    assert data["algebra"] == {"alpha": "1", "beta": "1", "aut_shape": "diag_only"}
    assert data["hdet_trivial"] is True
    assert data["gorenstein"]["by_stanley"] is True
    assert data["cyclotomic"]["flag"] is True
    assert data["theorem03"] == {"C2": True, "C3": True, "consistent": True}
    # series serialized lowest-degree-first
    assert data["series"]["num"][0] == 1
    assert data["series"]["den"][0] == 1


def test_analyze_rejects_antidiagonal_for_diagonal_shape(capsys):
    code = main(["analyze", "--alpha", "1", "--beta", "2",
                 "--gen", "[[0,1],[1,0]]"])
    assert code == 2


def test_analyze_sl2_full_shape(capsys):
    code = main(["analyze", "--alpha", "0", "--beta", "1",
                 "--gen", "[[0,1],[-1,0]]"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["theorem03"]["C2"] and data["theorem03"]["C3"]


def test_analyze_bad_input(capsys):
    assert main(["analyze", "--alpha", "1", "--beta", "1",
                 "--gen", "[[zeta(,0],[0,1]]"]) == 1
    assert main(["analyze", "--alpha", "1", "--beta", "1",
                 "--gen", "[[1,0],[0,0]]"]) == 3


def test_analyze_markdown(capsys):
    code = main(["analyze", "--alpha", "1", "--beta", "1", "--md",
                 "--gen", "[[zeta(4),0],[0,zeta(4)^-1]]"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("| field")
    assert "Q1(n=4)" in out


def test_classify_command(capsys):
    code = main(["classify", "--gen", "[[0,1],[-1,0]]"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 4
    assert "C4" in data["all_matches"]
    code = main(["classify", "--gen", "[[-1,0],[0,1]]"])
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 2


def test_paperlab_command(capsys):
    code = main(["paperlab", "--suite", "four-variable"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 3
    assert all(entry["passed"] for entry in data)


def test_paperlab_small_all(capsys):
    code = main(["paperlab", "--suite", "jordan-plane"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert {e["check_id"] for e in data} >= {"jordan-negation-series",
                                            "jordan-negation-stanley"}

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lechlab.errors import ExponentOverflow, InvalidGenerator, ParseError, UnknownVariable
from lechlab.formats import (
    load_run_config,
    load_tgraded,
    dump_tgraded,
    parse_ideal,
    report_rows,
    rows_from_csv,
    rows_to_csv,
    rows_to_json,
    serialize_ideal,
    to_jsonable,
)
from lechlab.ideals import ideal, maximal_ideal
from lechlab.inequalities import evaluate

from conftest import POLY2, POLY3, VER, ideals_in


def test_parse_examples():
    assert set(parse_ideal("x^3, x*y, y^3", POLY2).gens) == {(3, 0), (1, 1), (0, 3)}
    assert parse_ideal("x, y", POLY2) == maximal_ideal(POLY2)
    assert set(parse_ideal("x^2*y, y^3", POLY2).gens) == {(2, 1), (0, 3)}
    assert parse_ideal("x1^2, x2*x3, x3^4", POLY3) == ideal(POLY3, (2, 0, 0), (0, 1, 1), (0, 0, 4))
    assert parse_ideal("[[2,0],[1,1],[0,2]]", VER) == maximal_ideal(VER)
    assert parse_ideal([[2, 0], [3, 1]], VER) == ideal(VER, (2, 0))


def test_repeated_variables_multiply():
    assert parse_ideal("x*x*y, y^2*y", POLY2) == ideal(POLY2, (2, 1), (0, 3))


@pytest.mark.parametrize(
    "text, pos",
    [("x^", 2), ("x^3,, y", 4), ("x y", 2), ("x + y", 2), ("", 0)],
)
def test_syntax_errors_have_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ideal(text, POLY2)
    assert info.value.position == pos
    assert info.value.kind == "SyntaxError"


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as info:
        parse_ideal("x, z", POLY2)
    assert info.value.position == 3


def test_exponent_overflow():
    with pytest.raises(ExponentOverflow):
        parse_ideal("x^1000001, y", POLY2)
    parse_ideal("x^1000000, y", POLY2)


def test_bad_exponent_lists():
    with pytest.raises(InvalidGenerator):
        parse_ideal([[1, 2, 3]], POLY2)
    with pytest.raises(InvalidGenerator):
        parse_ideal("[[1,0]]", VER)


@settings(max_examples=80, deadline=None)
@given(st.one_of(ideals_in(POLY2, 6), ideals_in(POLY3, 3), ideals_in(VER, 3)))
def test_round_trip(I):
    text = serialize_ideal(I)
    assert parse_ideal(text, I.ambient) == I
    assert serialize_ideal(parse_ideal(text, I.ambient)) == text


def test_canonical_form():
    assert serialize_ideal(parse_ideal("y^3,   x*y ,x^3", POLY2)) == "x^3, x*y, y^3"


def test_jsonable_numbers():
    assert to_jsonable(Fraction(2, 3)) == "2/3"
    assert to_jsonable(Fraction(4)) == "4/1"
    assert to_jsonable(2**53 - 1) == 2**53 - 1
    assert to_jsonable(2**53) == str(2**53)
    assert to_jsonable([True, None, 3]) == [True, None, 3]


def _rows():
    rows = []
    for text in ["x, y", "x^3, x*y, y^3", "x^2, y^2"]:
        rows += report_rows(evaluate(parse_ideal(text, POLY2), ["lech", "hanes", "mfull2"]))
    return rows


def test_csv_and_json_agree():
    rows = _rows()
    from_csv = rows_from_csv(rows_to_csv(rows))
    from_json = json.loads(rows_to_json(rows))["rows"]
    assert from_csv == from_json == rows


def test_rows_columns():
    rows = _rows()
    row = rows[1]
    assert (row["bound_name"], row["bound_num"], row["bound_den"]) == ("HanesC", 1, 2)
    rejected = rows[-1]
    assert rejected["hypothesis_met"] is False and rejected["satisfied"] is None


def test_tgraded_file():
    spec = load_tgraded('{"base": "poly:1", "components": [[[2]], [[1]]], "K": 2, "generators": [[2, 0], [1, 1], [0, 2]]}')
    assert spec.ideal.K == 2
    assert spec.generators == [((2,), 0), ((1,), 1), ((0,), 2)]
    again = load_tgraded(dump_tgraded(spec.ideal, spec.generators))
    assert again == spec
    with pytest.raises(ParseError):
        load_tgraded({"base": "poly:1", "components": [[[2]]], "K": 3})
    with pytest.raises(ParseError):
        load_tgraded({"components": []})


def test_run_config_defaults_and_validation():
    cfg = load_run_config({"ring": "poly:2"})
    assert cfg.ring == POLY2 and cfg.bounds == ["lech"] and cfg.format == "json" and cfg.jobs == 1
    spec = cfg.enumeration_spec()
    assert spec.max_colength == 5
    with pytest.raises(ParseError):
        load_run_config({"ring": "poly:2", "jobs": 0})
    with pytest.raises(ParseError):
        load_run_config({"ring": "poly:2", "bounds": ["nonsense"]})
    with pytest.raises(ParseError):
        load_run_config({"ring": "poly:2", "colour": "red"})

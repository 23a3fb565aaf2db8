import json
from fractions import Fraction

import pytest

from pdakit.pda import (Pda, PdaFormatError, STAR, canonical_relabel,
                        format_pda, parse_pda, pda_from_json, pda_to_json,
                        scheme_parameters, validate_pda)

TINY = Pda(2, 2, 1, 1, ((STAR, 1), (1, STAR)))


def test_valid_examples():
    assert validate_pda(TINY).ok
    p = Pda(3, 3, 1, 3, ((STAR, 1, 2), (2, STAR, 3), (3, 1, STAR)))
    # symbol 1 appears at (0,1) and (2,1): same column, so this must fail
    assert not validate_pda(p).ok

    good = Pda(3, 3, 2, 1, ((STAR, STAR, 1), (STAR, 1, STAR), (1, STAR, STAR)))
    assert validate_pda(good).ok


def test_params_checked_first():
    rep = validate_pda(Pda(2, 2, 2, 1, ((STAR, STAR), (STAR, STAR))))
    assert rep.condition == "params" and "Q < F" in rep.detail
    rep = validate_pda(Pda(1, 2, 1, 0, ((STAR,), (STAR,))))
    assert rep.condition == "params"


def test_range_violation():
    rep = validate_pda(Pda(2, 2, 1, 1, ((STAR, 5), (1, STAR))))
    assert rep.condition == "range" and "(0,1)" in rep.detail


def test_c1_violation():
    rep = validate_pda(Pda(1, 3, 1, 1, ((STAR,), (STAR,), (1,))))
    assert rep.condition == "C1" and "column 0" in rep.detail


def test_c2_violation():
    rep = validate_pda(Pda(2, 2, 1, 2, ((STAR, 1), (1, STAR))))
    assert rep.condition == "C2" and "symbol 2" in rep.detail


def test_c3_same_row():
    rep = validate_pda(Pda(2, 2, 1, 1, ((1, 1), (STAR, STAR))))
    assert rep.condition == "C3" and "repeats" in rep.detail


def test_c3_crossing_cell():
    p = Pda(2, 3, 1, 2, ((STAR, 2), (1, STAR), (2, 1)))
    rep = validate_pda(p)
    assert rep.condition == "C3" and "crossing" in rep.detail


def test_pda_shape_errors():
    with pytest.raises(ValueError):
        Pda(2, 2, 1, 1, ((STAR, 1),))  # wrong row count
    with pytest.raises(ValueError):
        Pda(2, 2, 1, 1, ((STAR,), (1,)))  # wrong row width
    with pytest.raises(ValueError):
        Pda(2, 2, 1, 1, ((STAR, -1), (1, STAR)))


def test_scheme_parameters():
    assert scheme_parameters(TINY) == (2, 2, Fraction(1, 2), Fraction(1, 2))


def test_canonical_relabel():
    p = Pda(2, 2, 1, 2, ((STAR, 2), (2, STAR)))  # symbol 1 unused
    c = canonical_relabel(p)
    assert c == TINY
    assert canonical_relabel(c) == c
    shuffled = Pda(3, 3, 2, 3, ((STAR, STAR, 3), (STAR, 2, STAR), (1, STAR, STAR)))
    relabeled = canonical_relabel(shuffled)
    assert relabeled.grid == ((STAR, STAR, 1), (STAR, 2, STAR), (3, STAR, STAR))


def test_format_parse_round_trip():
    text = format_pda(TINY)
    assert text == "2 2 1 1\n* 1\n1 *\n"
    assert parse_pda(text) == TINY
    bigger = Pda(3, 3, 2, 1, ((STAR, STAR, 1), (STAR, 1, STAR), (1, STAR, STAR)))
    assert parse_pda(format_pda(bigger)) == bigger


def test_parse_errors():
    with pytest.raises(PdaFormatError, match="empty"):
        parse_pda("  \n \n")
    with pytest.raises(PdaFormatError, match="header"):
        parse_pda("1 2 3\n* *\n")
    with pytest.raises(PdaFormatError, match="non-integer"):
        parse_pda("a 2 1 1\n* 1\n1 *\n")
    with pytest.raises(PdaFormatError, match="grid rows"):
        parse_pda("2 2 1 1\n* 1\n")
    with pytest.raises(PdaFormatError, match="bad token"):
        parse_pda("2 2 1 1\n* 01\n1 *\n")
    with pytest.raises(PdaFormatError, match="bad token"):
        parse_pda("2 2 1 1\n* x\n1 *\n")
    with pytest.raises(PdaFormatError, match="bad token"):
        parse_pda("2 2 1 1\n* 0\n1 *\n")
    with pytest.raises(PdaFormatError, match="entries"):
        parse_pda("2 2 1 1\n* 1 1\n1 *\n")


def test_json_round_trip():
    obj = pda_to_json(TINY)
    assert obj == {"K": 2, "F": 2, "Q": 1, "S": 1, "grid": [["*", 1], [1, "*"]]}
    assert pda_from_json(obj) == TINY
    # survives a serialization pass
    assert pda_from_json(json.loads(json.dumps(obj))) == TINY


def test_json_provenance():
    obj = pda_to_json(TINY, provenance={"family": "manual"})
    assert obj["provenance"] == {"family": "manual"}
    assert pda_from_json(obj) == TINY  # provenance is advisory


def test_json_malformed():
    with pytest.raises(PdaFormatError):
        pda_from_json({"K": 2, "F": 2, "Q": 1, "S": 1, "grid": [["*", 0], [1, "*"]]})
    with pytest.raises(PdaFormatError):
        pda_from_json({"K": 2, "F": 2, "Q": 1, "grid": [["*", 1], [1, "*"]]})
    with pytest.raises(PdaFormatError):
        pda_from_json({"K": 2, "F": 2, "Q": 1, "S": 1, "grid": [["*", "x"], [1, "*"]]})

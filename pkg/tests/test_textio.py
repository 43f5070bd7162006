import numpy as np
import pytest

from codemorph.ideal import canonical_form
from codemorph.textio import (
    ParseError,
    format_cf,
    format_code,
    format_matrix,
    parse_cf,
    parse_code,
    parse_matrix,
    parse_pseudomonomial,
)


def test_matrix_round_trip():
    M = np.array([[1, 0, 1], [1, 0, 1], [0, 0, 0]], dtype=np.uint8)
    assert np.array_equal(parse_matrix(format_matrix(M)), M)


def test_comments_and_blank_lines():
    M = parse_matrix("# header\n\n10\n  01\n# tail\n")
    assert M.tolist() == [[1, 0], [0, 1]]


def test_code_deduplicates():
    C = parse_code("10\n10\n01\n")
    assert len(C) == 2


def test_bad_character_position():
    with pytest.raises(ParseError) as info:
        parse_matrix("101\n1x1\n")
    assert (info.value.line, info.value.column) == (2, 2)


def test_ragged_rows():
    with pytest.raises(ParseError) as info:
        parse_matrix("101\n11\n")
    assert info.value.line == 2


def test_empty_input():
    assert parse_matrix("").shape == (0, 0)


@pytest.mark.parametrize("text", ["x2*(1-x1)*(1-x3)", " (1-x3) * x2*(1-x1) ", "(1 - x1)*x2*(1-x3)"])
def test_pseudomonomial_syntax(text):
    assert str(parse_pseudomonomial(text)) == "x2*(1-x1)*(1-x3)"


@pytest.mark.parametrize("text", ["x0", "x1**x2", "y1", "x1*", "x1*(1-x1)"])
def test_pseudomonomial_errors(text):
    with pytest.raises(ParseError):
        parse_pseudomonomial(text)


def test_cf_round_trip(example1):
    cf = canonical_form(example1)
    again = parse_cf(format_cf(cf), n=4)
    assert again.elements == cf.elements
    assert format_code(example1).count("\n") == 7

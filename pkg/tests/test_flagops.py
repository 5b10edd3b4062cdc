import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcomplete.flagops import (
    FlagVector,
    bipyramid,
    cone,
    dee,
    dual,
    evaluate,
    point,
    prism,
    sparse_flags,
    sparse_masks,
)
from gcomplete.lattice import flags_of_lattice, lattice_of_word
from gcomplete.words import WordSyntaxError, fibonacci

from helpers import words_up_to

SEGMENT = FlagVector.from_dict(1, {(): 1, (0,): 2})
TRIANGLE = FlagVector.from_dict(2, {(): 1, (0,): 3, (1,): 3, (0, 1): 6})
SQUARE = FlagVector.from_dict(2, {(): 1, (0,): 4, (1,): 4, (0, 1): 8})
CUBE = FlagVector.from_dict(
    3, {(): 1, (0,): 8, (1,): 12, (2,): 6, (0, 1): 24, (0, 2): 24, (1, 2): 24, (0, 1, 2): 48}
)
OCTAHEDRON = FlagVector.from_dict(
    3, {(): 1, (0,): 6, (1,): 12, (2,): 8, (0, 1): 24, (0, 2): 24, (1, 2): 24, (0, 1, 2): 48}
)


def test_cone_examples():
    assert cone(point()) == SEGMENT
    assert cone(SEGMENT) == TRIANGLE
    sqpyr = cone(SQUARE)
    # square pyramid, counted on its lattice by brute force
    assert sqpyr == FlagVector.from_dict(
        3, {(): 1, (0,): 5, (1,): 8, (2,): 5, (0, 1): 16, (0, 2): 16, (1, 2): 16, (0, 1, 2): 32}
    )


def test_prism_examples():
    assert prism(point()) == SEGMENT
    assert prism(SEGMENT) == SQUARE
    assert prism(SQUARE) == CUBE


def test_dual_examples():
    assert dual(CUBE) == OCTAHEDRON
    for d in range(1, 7):
        simplex = evaluate("C" * d)
        assert dual(simplex) == simplex


def test_bipyramid_examples():
    assert bipyramid(SEGMENT) == SQUARE
    assert bipyramid(SQUARE) == OCTAHEDRON
    with pytest.raises(ValueError):
        bipyramid(point())


def test_dee_examples():
    assert dee(point()) == FlagVector.from_dict(2, {(): 0, (0,): 1, (1,): 1, (0, 1): 2})
    assert dee(point()) == SQUARE - TRIANGLE
    assert dee(FlagVector.zero(3)) == FlagVector.zero(5)
    for w in words_up_to(5):
        assert dee(evaluate(w))[()] == 0


def test_evaluate_examples():
    simplex3 = evaluate("C^3")
    assert simplex3[(0,)] == 4
    assert simplex3[(0, 1, 2)] == 24
    assert evaluate("BIC^3")[(0,)] == 10
    assert evaluate("BIC^3")[(4,)] == 12
    assert evaluate("BCBCBCBC")[(0,)] == 13
    assert evaluate("") == point()
    assert evaluate("D") == dee(point())
    assert evaluate("CD").degree == 3


@pytest.mark.parametrize("word", ["I", "CB", "B^2", "IIC^2I"])
def test_evaluate_rejects_bad_innermost(word):
    with pytest.raises(ValueError):
        evaluate(word)


def test_evaluate_syntax_error():
    with pytest.raises(WordSyntaxError):
        evaluate("CX")


def test_oracle_equivalence_small():
    for w in words_up_to(4):
        assert evaluate(w) == flags_of_lattice(lattice_of_word(w)), w


def test_vertex_counts():
    for w in words_up_to(6):
        f = evaluate(w)
        assert cone(f)[(0,)] == f[(0,)] + 1
        assert prism(f)[(0,)] == 2 * f[(0,)]
        assert bipyramid(f)[(0,)] == f[(0,)] + 2


def test_cone_and_prism_agree_on_point():
    assert cone(point()) == prism(point())


def test_integrality():
    for w in words_up_to(6):
        f = evaluate(w)
        assert f.is_integral()
        assert all(x >= 0 for x in f)
        assert f[()] == 1


def rational_vectors(d):
    q = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.lists(q, min_size=1 << d, max_size=1 << d).map(lambda xs: FlagVector(d, xs))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 5).flatmap(lambda d: st.tuples(rational_vectors(d), rational_vectors(d))),
       st.fractions(max_denominator=9), st.fractions(max_denominator=9))
def test_linearity(fg, a, b):
    f, g = fg
    for op in (cone, prism, dual, dee):
        assert op(a * f + b * g) == a * op(f) + b * op(g)
    if f.degree >= 1:
        assert bipyramid(a * f + b * g) == a * bipyramid(f) + b * bipyramid(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 8).flatmap(rational_vectors))
def test_dual_involution(f):
    assert dual(dual(f)) == f


def test_dual_involution_all_degrees():
    for d in range(9):
        f = FlagVector(d, [Fraction(m * m - 3, m + 1) for m in range(1 << d)])
        assert dual(dual(f)) == f


def test_sparse_masks():
    assert [fibonacci(d) for d in range(1, 11)] == [len(sparse_masks(d)) for d in range(1, 11)]
    assert sparse_masks(0) == (0,)
    assert sparse_flags(SQUARE) == [1, 4]
    f = evaluate("BCBCBCBC")
    vals = sparse_flags(f)
    assert len(vals) == 34
    assert vals[0] == 1
    for m in sparse_masks(8):
        assert not m & (m >> 1)
        assert m < 1 << 7


def test_json_round_trip():
    f = evaluate("IC^2")
    obj = json.loads(f.to_json())
    assert obj["degree"] == 3
    assert obj["entries"][""] == "1"
    assert obj["entries"]["0"] == "6"
    assert obj["entries"]["0,2"] == "18"
    assert FlagVector.from_json(f.to_json()) == f
    half = FlagVector(1, [Fraction(1, 2), 3])
    assert FlagVector.from_json(half.to_json()) == half
    assert json.loads(half.to_json())["entries"][""] == "1/2"


def test_flag_vector_basics():
    with pytest.raises(ValueError):
        FlagVector(2, [1, 2, 3])
    with pytest.raises(TypeError):
        FlagVector(0, [0.5])
    with pytest.raises(ValueError):
        SQUARE + CUBE
    assert FlagVector(1, [Fraction(4, 2), 1]).entries == (2, 1)
    assert isinstance(FlagVector(1, [Fraction(4, 2), 1]).entries[0], int)

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcomplete.words import (
    FibonacciIndex,
    WordSyntaxError,
    cd_degree,
    enumerate_cd_words,
    enumerate_indexes,
    fibonacci,
    format_word,
    index_of_word,
    parse_index,
    parse_word,
    word_of_index,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("B^4CIC^2(pt)", "BBBBCICC"),
        ("BIC^3", "BICCC"),
        ("C", "C"),
        ("B^2ICIC^2", "BBICICC"),
        ("C^12", "C" * 12),
    ],
)
def test_parse_word(text, expected):
    assert parse_word(text) == expected


def test_parse_word_zero_repetition():
    with pytest.raises(WordSyntaxError, match="zero repetition") as info:
        parse_word("C^0")
    assert info.value.pos == 2


@pytest.mark.parametrize("text, pos", [("BXC", 1), ("", 0), ("C^", 1), ("c", 0), ("BD", 1)])
def test_parse_word_syntax_errors(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.pos == pos


def test_parse_word_cd_alphabet():
    assert parse_word("D^2C", alphabet="CD") == "DDC"


def test_format_word_round_trip():
    for w in ["BBBBCICC", "C", "BICCC", "IIIC"]:
        assert parse_word(format_word(w)) == w
    assert format_word("BBBBCICC") == "B^4CIC^2"


@pytest.mark.parametrize(
    "text, pairs",
    [
        ("[00;11]", ((0, 1), (0, 1))),
        ("[0,0,0;0,1,1]", ((0, 0), (0, 1), (0, 1))),
        ("[000;011]", ((0, 0), (0, 1), (0, 1))),
        ("[1;0]", ((1, 0),)),
        ("[10;21]", ((1, 2), (0, 1))),
        ("[12,0;3,4]", ((12, 3), (0, 4))),
    ],
)
def test_parse_index(text, pairs):
    assert parse_index(text) == FibonacciIndex(pairs)


@pytest.mark.parametrize("text", ["[0,0;1]", "[00;1]", "0,0;1,1", "[a;b]", "[;]"])
def test_parse_index_errors(text):
    with pytest.raises(WordSyntaxError):
        parse_index(text)


def test_index_str_and_compact():
    k = parse_index("[00;11]")
    assert str(k) == "[0,0;1,1]"
    assert k.compact() == "[00;11]"
    assert parse_index(str(k)) == k


def test_index_concatenation():
    assert FibonacciIndex([(4, 5)]) + parse_index("[1,2;3,0]") == parse_index("[4,1,2;5,3,0]")


def test_index_degree_and_order():
    k = parse_index("[0,0,0;0,1,1]")
    assert k.order == 3
    assert k.degree == 8
    assert parse_index("[2;3]").degree == 7


@pytest.mark.parametrize(
    "pairs, word",
    [(((0, 1), (0, 1)), "CCDC"), (((1, 0),), "D"), (((0, 4),), "CCCC"), (((0, 0), (0, 0)), "CD")],
)
def test_word_of_index(pairs, word):
    assert word_of_index(FibonacciIndex(pairs)) == word


@pytest.mark.parametrize(
    "word, pairs",
    [("CCDC", ((0, 1), (0, 1))), ("DCC", ((1, 2),)), ("CD", ((0, 0), (0, 0))), ("", ((0, 0),))],
)
def test_index_of_word(word, pairs):
    assert index_of_word(word) == FibonacciIndex(pairs)


def test_index_of_word_rejects_other_letters():
    with pytest.raises(ValueError):
        index_of_word("CIC")


def all_cd_words(d):
    # brute force: every string over {C, D} of length <= d, filtered by degree
    out = []
    for n in range(d + 1):
        for letters in itertools.product("CD", repeat=n):
            w = "".join(letters)
            if cd_degree(w) == d:
                out.append(w)
    return sorted(out)


@pytest.mark.parametrize("d", range(11))
def test_enumeration_matches_brute_force(d):
    assert list(enumerate_cd_words(d)) == all_cd_words(d)
    idx = enumerate_indexes(d)
    assert [word_of_index(k) for k in idx] == all_cd_words(d)


def test_enumeration_small_cases():
    assert [k.word for k in enumerate_indexes(2)] == ["CC", "D"]
    assert [k.word for k in enumerate_indexes(3)] == ["CCC", "CD", "DC"]
    assert enumerate_indexes(3) == (
        FibonacciIndex([(0, 3)]),
        FibonacciIndex([(0, 0), (0, 0)]),
        FibonacciIndex([(1, 1)]),
    )
    assert enumerate_indexes(0) == (FibonacciIndex([(0, 0)]),)


def test_fibonacci_counts():
    assert [len(enumerate_indexes(d)) for d in range(1, 11)] == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    assert [fibonacci(d) for d in range(1, 11)] == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]


@pytest.mark.parametrize("d", range(11))
def test_round_trips_and_degree(d):
    for k in enumerate_indexes(d):
        assert index_of_word(word_of_index(k)) == k
        assert k.degree == d == cd_degree(word_of_index(k))
    for w in enumerate_cd_words(d):
        assert word_of_index(index_of_word(w)) == w


pairs = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=5)


@given(pairs)
def test_round_trip_property(ps):
    k = FibonacciIndex(ps)
    w = word_of_index(k)
    assert index_of_word(w) == k
    assert cd_degree(w) == k.degree


@given(st.text("CD", max_size=14))
def test_word_round_trip_property(w):
    assert word_of_index(index_of_word(w)) == w

"""Operator words and Fibonacci indexes.

An operator word is a string over ``C`` (pyramid), ``I`` (prism) and ``B``
(bipyramid), read as a composition of operators: the leftmost letter is the
outermost operator, so ``"BIC"`` means ``B(I(C(pt)))``.  A CD-word is a string
over ``C`` and ``D`` with ``D = IC - CC``.

A Fibonacci index is a sequence of pairs ``((i_0, j_0), ..., (i_r, j_r))``
standing for the CD-word ``D^i0 C^j0 CD D^i1 C^j1 CD ... D^ir C^jr``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import groupby

__all__ = [
    "WordSyntaxError",
    "FibonacciIndex",
    "parse_word",
    "format_word",
    "parse_index",
    "word_of_index",
    "index_of_word",
    "cd_degree",
    "enumerate_cd_words",
    "enumerate_indexes",
    "fibonacci",
]

OPERATOR_LETTERS = "CIB"
CD_LETTERS = "CD"


class WordSyntaxError(ValueError):
    """Raised for malformed word or index text; ``pos`` is the offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class FibonacciIndex(tuple):
    """An immutable sequence of ``(i, j)`` pairs of natural numbers."""

    def __new__(cls, pairs=((0, 0),)):
        pairs = tuple((int(i), int(j)) for i, j in pairs)
        if not pairs:
            raise ValueError("a Fibonacci index has at least one pair")
        if any(i < 0 or j < 0 for i, j in pairs):
            raise ValueError(f"negative entry in {pairs}")
        return super().__new__(cls, pairs)

    def __getnewargs__(self):
        return (tuple(self),)

    @property
    def order(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        r = len(self) - 1
        return 2 * sum(i for i, _ in self) + sum(j for _, j in self) + 3 * r

    @property
    def word(self) -> str:
        return word_of_index(self)

    def __add__(self, other):
        # concatenation of indexes stays an index
        return FibonacciIndex(tuple(self) + tuple(other))

    def __str__(self) -> str:
        i_list = ",".join(str(i) for i, _ in self)
        j_list = ",".join(str(j) for _, j in self)
        return f"[{i_list};{j_list}]"

    def __repr__(self) -> str:
        return f"FibonacciIndex({str(self)!r})"

    def compact(self) -> str:
        """The digit-run form used in print, e.g. ``[00;11]``; single digits only."""
        if any(i > 9 or j > 9 for i, j in self):
            raise ValueError(f"{self} has a multi-digit entry")
        return "[" + "".join(str(i) for i, _ in self) + ";" + "".join(str(j) for _, j in self) + "]"


_TOKEN = re.compile(r"([A-Z])(?:\^(\d+))?")


def parse_word(text: str, alphabet: str = OPERATOR_LETTERS) -> str:
    """Expand ``B^4CIC^2(pt)`` style text into the plain letter string ``BBBBCICC``.

    Whitespace is ignored.  A trailing ``(pt)`` is optional.
    """
    src = "".join(text.split())
    body = src[:-4] if src.endswith("(pt)") else src
    if not body:
        raise WordSyntaxError("empty word", text, 0)
    out = []
    pos = 0
    while pos < len(body):
        m = _TOKEN.match(body, pos)
        if m is None or m.group(1) not in alphabet:
            raise WordSyntaxError(
                f"expected one of {', '.join(alphabet)}", text, _offset(text, pos)
            )
        count = 1 if m.group(2) is None else int(m.group(2))
        if count == 0:
            raise WordSyntaxError("zero repetition count", text, _offset(text, m.start(2)))
        out.append(m.group(1) * count)
        pos = m.end()
    return "".join(out)


def _offset(text: str, pos: int) -> int:
    # map an offset in the whitespace-stripped string back to the original text
    seen = -1
    for k, ch in enumerate(text):
        if not ch.isspace():
            seen += 1
            if seen == pos:
                return k
    return len(text)


def format_word(word: str) -> str:
    """Inverse of :func:`parse_word`: ``BBBBCICC`` -> ``B^4CIC^2``."""
    parts = []
    for letter, run in groupby(word):
        n = len(list(run))
        parts.append(letter if n == 1 else f"{letter}^{n}")
    return "".join(parts)


_NAT_LIST = r"\d+(?:,\d+)*"
_COMMA_INDEX = re.compile(rf"\[({_NAT_LIST});({_NAT_LIST})\]")


def parse_index(text: str) -> FibonacciIndex:
    """Parse ``[0,0;1,1]`` or the compact single-digit form ``[00;11]``."""
    src = "".join(text.split())
    m = _COMMA_INDEX.fullmatch(src)
    if m is None:
        raise WordSyntaxError("expected '[i,...;j,...]'", text, 0)
    i_text, j_text = m.groups()
    if "," in i_text or "," in j_text:
        i_list = [int(x) for x in i_text.split(",")]
        j_list = [int(x) for x in j_text.split(",")]
    else:
        # no commas anywhere: compact form, one digit per entry
        i_list = [int(x) for x in i_text]
        j_list = [int(x) for x in j_text]
    if len(i_list) != len(j_list):
        raise WordSyntaxError(
            f"i-list has {len(i_list)} entries but j-list has {len(j_list)}",
            text,
            src.index(";"),
        )
    return FibonacciIndex(zip(i_list, j_list))


def word_of_index(k) -> str:
    """The CD-word ``(C,D)^k``."""
    return "CD".join("D" * i + "C" * j for i, j in k)


def index_of_word(word: str) -> FibonacciIndex:
    """Factor a CD-word at its ``CD`` subwords.  Inverse of :func:`word_of_index`."""
    if set(word) - set(CD_LETTERS):
        raise ValueError(f"not a CD-word: {word!r}")
    pairs = []
    for piece in word.split("CD"):
        i = len(piece) - len(piece.lstrip("D"))
        pairs.append((i, len(piece) - i))
    return FibonacciIndex(pairs)


def cd_degree(word: str) -> int:
    return word.count("C") + 2 * word.count("D")


@lru_cache(maxsize=None)
def enumerate_cd_words(d: int) -> tuple[str, ...]:
    """All CD-words of degree ``d`` in lexicographic order (C < D)."""
    if d < 0:
        return ()
    if d == 0:
        return ("",)
    words = ["C" + w for w in enumerate_cd_words(d - 1)]
    words += ["D" + w for w in enumerate_cd_words(d - 2)]
    return tuple(words)


@lru_cache(maxsize=None)
def enumerate_indexes(d: int) -> tuple[FibonacciIndex, ...]:
    """All Fibonacci indexes of degree ``d`` in canonical order."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return tuple(index_of_word(w) for w in enumerate_cd_words(d))


def fibonacci(d: int) -> int:
    """Number of degree-``d`` indexes: 1, 1, 2, 3, 5, ... for d = 0, 1, 2, ..."""
    a, b = 1, 1
    for _ in range(d):
        a, b = b, a + b
    return a

"""Exact flag vectors and the linear operators acting on them.

A flag vector of degree ``d`` is stored as a tuple of ``2**d`` exact numbers
indexed by bitmask: bit ``s`` of the mask is set when rank ``s`` belongs to
the subset ``S``.  So ``entries[0]`` is ``f_{}`` and ``entries[0b101]`` is
``f_{0,2}``.

The pyramid and prism maps are tabulated once per degree as sparse integer
matrices (lists of ``(coefficient, source mask)`` per target mask).
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational

from .words import parse_word

__all__ = [
    "FlagVector",
    "mask_of",
    "ranks_of",
    "point",
    "cone",
    "prism",
    "dual",
    "bipyramid",
    "dee",
    "evaluate",
    "sparse_masks",
    "sparse_flags",
]


def mask_of(ranks) -> int:
    m = 0
    for s in ranks:
        m |= 1 << s
    return m


def ranks_of(mask: int) -> tuple[int, ...]:
    out = []
    s = 0
    while mask:
        if mask & 1:
            out.append(s)
        mask >>= 1
        s += 1
    return tuple(out)


def _exact(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return _exact(Fraction(x))
    raise TypeError(f"flag vector entries must be exact rationals, got {type(x).__name__}")


class FlagVector:
    """Flag vector of a polytope, or of a formal rational sum of polytopes."""

    __slots__ = ("degree", "entries", "_hash")

    def __init__(self, degree: int, entries):
        entries = tuple(_exact(x) for x in entries)
        if len(entries) != 1 << degree:
            raise ValueError(f"degree {degree} needs {1 << degree} entries, got {len(entries)}")
        self.degree = degree
        self.entries = entries
        self._hash = None

    @classmethod
    def from_dict(cls, degree: int, entries: dict) -> "FlagVector":
        """Build from ``{subset: value}``; missing subsets are zero."""
        vals = [0] * (1 << degree)
        for key, v in entries.items():
            m = mask_of(key)
            if m >= len(vals):
                raise ValueError(f"subset {sorted(key)} out of range for degree {degree}")
            vals[m] = v
        return cls(degree, vals)

    @classmethod
    def zero(cls, degree: int) -> "FlagVector":
        return cls(degree, [0] * (1 << degree))

    def __getitem__(self, subset):
        if isinstance(subset, int):
            return self.entries[subset]
        return self.entries[mask_of(subset)]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        """Yield ``(ranks, value)`` in mask order."""
        for m, v in enumerate(self.entries):
            yield ranks_of(m), v

    def as_dict(self) -> dict:
        return {ranks_of(m): v for m, v in enumerate(self.entries)}

    def _check(self, other):
        if not isinstance(other, FlagVector):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return FlagVector(self.degree, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return FlagVector(self.degree, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return FlagVector(self.degree, [-a for a in self.entries])

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Rational)):
            return NotImplemented
        return FlagVector(self.degree, [scalar * a for a in self.entries])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FlagVector):
            return NotImplemented
        return self.degree == other.degree and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, self.entries))
        return self._hash

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.entries)

    def __repr__(self):
        body = ", ".join(
            "{" + ",".join(map(str, r)) + "}: " + str(v) for r, v in self.items() if v != 0
        )
        return f"FlagVector(degree={self.degree}, {{{body}}})"

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "entries": {",".join(map(str, r)): str(v) for r, v in self.items()},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_obj(), **kw)

    @classmethod
    def from_json(cls, text_or_obj) -> "FlagVector":
        obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        d = int(obj["degree"])
        entries = {}
        for key, v in obj["entries"].items():
            ranks = tuple(int(s) for s in key.split(",")) if key else ()
            entries[ranks] = Fraction(v)
        return cls.from_dict(d, entries)


def point() -> FlagVector:
    return FlagVector(0, [1])


# A chain of proper faces in CP (resp. IP) splits into a run of base faces
# followed by a run of coned (resp. cylinder) faces.  Term j below starts the
# second run at the j-th chain element; its underlying P-chain has ranks
# s_1..s_{j-1} unchanged and s_j-1, ..., s_k-1 shifted down, where the last
# base face and the first coned face may coincide (the set union merges them).
# Rank d in the all-base term is the improper top face of P.

def _tau(ranks, j):
    low = ranks[:j]
    high = [s - 1 for s in ranks[j:] if s >= 1]
    return mask_of(low) | mask_of(high)


@lru_cache(maxsize=None)
def _cone_table(d: int):
    top = ~(1 << d)
    table = []
    for m in range(1 << (d + 1)):
        rs = ranks_of(m)
        terms = [(1, m & top)]
        terms += [(1, _tau(rs, j)) for j in range(len(rs))]
        table.append(_collect(terms))
    return tuple(table)


@lru_cache(maxsize=None)
def _prism_table(d: int):
    top = ~(1 << d)
    table = [((1, 0),)]
    for m in range(1, 1 << (d + 1)):
        rs = ranks_of(m)
        terms = [(2, m & top)]
        for j, s in enumerate(rs):
            if s >= 1:
                terms.append((1 if j == 0 else 2, _tau(rs, j)))
        table.append(_collect(terms))
    return tuple(table)


def _collect(terms):
    acc = {}
    for c, src in terms:
        acc[src] = acc.get(src, 0) + c
    return tuple(sorted((c, src) for src, c in acc.items()))


def _apply(table, f: FlagVector) -> FlagVector:
    e = f.entries
    return FlagVector(f.degree + 1, [sum(c * e[src] for c, src in row) for row in table])


def cone(f: FlagVector) -> FlagVector:
    """Pyramid over ``f``."""
    return _apply(_cone_table(f.degree), f)


def prism(f: FlagVector) -> FlagVector:
    """Product of ``f`` with a segment."""
    return _apply(_prism_table(f.degree), f)


@lru_cache(maxsize=None)
def _reverse_table(d: int):
    return tuple(mask_of(d - 1 - s for s in ranks_of(m)) for m in range(1 << d))


def dual(f: FlagVector) -> FlagVector:
    """Polar dual: ``f_S -> f_{d-1-S}``."""
    e = f.entries
    return FlagVector(f.degree, [e[src] for src in _reverse_table(f.degree)])


def bipyramid(f: FlagVector) -> FlagVector:
    """Free sum of ``f`` with a segment, computed as ``dual(prism(dual(f)))``."""
    if f.degree == 0:
        raise ValueError("the bipyramid over a point is undefined")
    return dual(prism(dual(f)))


def dee(f: FlagVector) -> FlagVector:
    """The degree-2 operator ``D = IC - CC``."""
    c = cone(f)
    return prism(c) - cone(c)


_OPS = {"C": cone, "I": prism, "B": bipyramid, "D": dee}


def evaluate(word: str) -> FlagVector:
    """Flag vector of ``word(pt)`` for a word over ``C, I, B, D``.

    Accepts exponent notation (``"BIC^3"``).  The innermost letter may not be
    ``I`` or ``B``: ``I(pt)`` duplicates ``C(pt)`` and ``B(pt)`` is undefined.
    An empty word is the point itself.
    """
    letters = parse_word(word, alphabet="CIBD") if word else ""
    if letters and letters[-1] in "IB":
        raise ValueError(f"innermost letter of {word!r} must be C or D, not {letters[-1]}")
    return _evaluate(letters)


@lru_cache(maxsize=1 << 16)
def _evaluate(letters: str) -> FlagVector:
    if not letters:
        return point()
    return _OPS[letters[0]](_evaluate(letters[1:]))


@lru_cache(maxsize=None)
def sparse_masks(d: int) -> tuple[int, ...]:
    """Masks of subsets of ``{0..d-2}`` with no two consecutive ranks.

    Ordered by size, then lexicographically.  There are ``fibonacci(d)`` of them.
    """
    out = []
    for size in range(d + 1):
        found = False
        for combo in combinations(range(max(d - 1, 0)), size):
            if all(b - a >= 2 for a, b in zip(combo, combo[1:])):
                out.append(mask_of(combo))
                found = True
        if not found:
            break
    return tuple(out)


def sparse_flags(f: FlagVector) -> list:
    """The flag numbers on sparse subsets, in :func:`sparse_masks` order."""
    return [f.entries[m] for m in sparse_masks(f.degree)]

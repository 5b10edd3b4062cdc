"""The CD-word basis of the flag-vector span and exact decomposition in it.

Any degree-``d`` polytope flag vector is a unique rational combination of the
flag vectors of ``(C,D)^l(pt)``, ``l`` running over the degree-``d`` Fibonacci
indexes.  Coefficients are solved on the sparse coordinates (subsets of
``{0..d-2}`` without two consecutive ranks), and every other coordinate is
then checked, so a vector outside the span is rejected rather than projected.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from ._cache import per_degree
from .flagops import FlagVector, evaluate, sparse_masks
from .linalg import integer_inverse, rank
from .words import FibonacciIndex, enumerate_indexes, word_of_index

__all__ = [
    "OutsideSpanError",
    "NonIntegralWarning",
    "Decomposition",
    "basis_vectors",
    "basis_matrix",
    "basis_rank",
    "decompose",
    "recompose",
]


class OutsideSpanError(ValueError):
    pass


class NonIntegralWarning(UserWarning):
    pass


@per_degree
def basis_vectors(d: int) -> dict:
    """``{index: flag vector of (C,D)^index(pt)}`` in canonical index order."""
    return {k: evaluate(word_of_index(k)) for k in enumerate_indexes(d)}


@per_degree
def basis_matrix(d: int) -> tuple:
    """Rows of integer flag numbers, one per index, columns in mask order."""
    return tuple(v.entries for v in basis_vectors(d).values())


def basis_rank(d: int) -> int:
    return rank(basis_matrix(d))


@dataclass(frozen=True)
class _Solver:
    degree: int
    den: int
    # lam_num[l] = sum_s f[sparse_s] * adj[s][l]; lam = lam_num / den
    adj: tuple
    cols: tuple


@per_degree
def _solver(d: int) -> _Solver:
    cols = sparse_masks(d)
    rows = basis_matrix(d)
    square = [[row[c] for c in cols] for row in rows]
    # f_sparse = lam @ square  =>  lam = f_sparse @ square^-1
    den, adj = integer_inverse(square)
    return _Solver(d, den, tuple(map(tuple, adj)), cols)


@dataclass(frozen=True)
class Decomposition:
    """Coefficients of a flag vector in the CD-word basis."""

    degree: int
    coefficients: dict = field(default_factory=dict)

    def __getitem__(self, k):
        return self.coefficients[FibonacciIndex(k)]

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.coefficients.values())

    @classmethod
    def indicator(cls, k) -> "Decomposition":
        k = FibonacciIndex(k)
        return cls(k.degree, {l: int(l == k) for l in enumerate_indexes(k.degree)})


def _normalize(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def decompose(f: FlagVector) -> Decomposition:
    """Exact coefficients ``lam`` with ``f = sum lam_l * f((C,D)^l(pt))``."""
    d = f.degree
    s = _solver(d)
    if f.is_integral():
        scale, fe = 1, list(f.entries)
    else:
        scale = lcm(*(x.denominator for x in f.entries if isinstance(x, Fraction)))
        fe = [int(x * scale) for x in f.entries]
    fs = [fe[c] for c in s.cols]
    n = len(fs)
    lam_num = [sum(fs[i] * s.adj[i][l] for i in range(n) if fs[i]) for l in range(n)]

    rows = basis_matrix(d)
    for m in range(1 << d):
        if sum(lam_num[l] * rows[l][m] for l in range(n)) != s.den * fe[m]:
            raise OutsideSpanError(
                f"flag vector is outside the degree-{d} span (coordinate {m:b} inconsistent)"
            )

    denom = s.den * scale
    coeffs = {
        k: _normalize(Fraction(num, denom)) for k, num in zip(enumerate_indexes(d), lam_num)
    }
    dec = Decomposition(d, coeffs)
    if f.is_integral() and f.entries[0] == 1 and not dec.is_integral():
        warnings.warn(f"non-integral basis coefficients for {f!r}", NonIntegralWarning, stacklevel=2)
    return dec


def recompose(dec: Decomposition) -> FlagVector:
    d = dec.degree
    out = [0] * (1 << d)
    for k, vec in basis_vectors(d).items():
        lam = dec.coefficients.get(k, 0)
        if lam:
            out = [a + lam * b for a, b in zip(out, vec.entries)]
    return FlagVector(d, out)

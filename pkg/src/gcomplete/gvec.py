"""The complete g-vector, its toric slice, the dual g-vector and effective sets.

``g_k`` is the linear functional with ``g_k((C,D)^l(pt)) = [k <= l]`` in the
singularity order, so for a flag vector with basis coefficients ``lam``,
``g_k = sum(lam_l for l >= k)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .basis import Decomposition, decompose, recompose
from .flagops import FlagVector, bipyramid, cone, dual, prism
from .sorder import build_order
from .words import FibonacciIndex, enumerate_indexes, format_word, parse_index

__all__ = [
    "GVector",
    "IndexSet",
    "g_from_decomposition",
    "g_vector",
    "decomposition_from_g",
    "flag_from_g",
    "toric_g",
    "g_dual",
    "is_effective",
    "ClosureReport",
    "effective_closure_check",
]


@dataclass(frozen=True)
class GVector:
    degree: int
    values: dict = field(default_factory=dict)

    def __getitem__(self, k):
        return self.values[FibonacciIndex(k)]

    def negative(self) -> dict:
        return {k: v for k, v in self.values.items() if v < 0}

    def to_json_obj(self, word: str | None = None) -> dict:
        obj = {}
        if word is not None:
            obj["word"] = format_word(word)
        obj["degree"] = self.degree
        obj["g"] = [{"index": str(k), "value": str(v)} for k, v in self.values.items()]
        return obj

    def to_json(self, word: str | None = None, **kw) -> str:
        return json.dumps(self.to_json_obj(word), **kw)


class IndexSet(frozenset):
    """A set of Fibonacci indexes sharing one degree."""

    def __new__(cls, degree: int, members=()):
        members = [parse_index(m) if isinstance(m, str) else FibonacciIndex(m) for m in members]
        for k in members:
            if k.degree != degree:
                raise ValueError(f"{k} has degree {k.degree}, expected {degree}")
        self = super().__new__(cls, members)
        self.degree = degree
        return self

    @classmethod
    def all(cls, degree: int) -> "IndexSet":
        return cls(degree, enumerate_indexes(degree))

    def __repr__(self):
        return f"IndexSet({self.degree}, [{', '.join(map(str, sorted(self, key=lambda k: k.word)))}])"


def g_from_decomposition(dec: Decomposition) -> GVector:
    rel = build_order(dec.degree)
    lam = [dec.coefficients.get(k, 0) for k in rel.indexes]
    values = {}
    for a, k in enumerate(rel.indexes):
        row = rel.matrix[a]
        values[k] = sum(x for x, up in zip(lam, row) if up)
    return GVector(dec.degree, values)


def g_vector(f: FlagVector) -> GVector:
    return g_from_decomposition(decompose(f))


def decomposition_from_g(g: GVector) -> Decomposition:
    """Invert ``g = M lam`` (``M[k][l] = [k <= l]``, unitriangular).

    Walk a linear extension from the top down: ``lam_k = g_k - sum(lam_l for l > k)``.
    """
    rel = build_order(g.degree)
    lam = {}
    for k in reversed(rel.linear_extension()):
        above = sum(lam[l] for l in rel.up_set(k) if l != k)
        lam[k] = g.values[k] - above
    return Decomposition(g.degree, {k: lam[k] for k in rel.indexes})


def flag_from_g(g: GVector) -> FlagVector:
    return recompose(decomposition_from_g(g))


def toric_g(f: FlagVector) -> list:
    """``(g_0, ..., g_{d//2})`` read off the single-pair indexes ``[i; d-2i]``."""
    d = f.degree
    g = g_vector(f)
    return [g.values[FibonacciIndex([(i, d - 2 * i)])] for i in range(d // 2 + 1)]


def g_dual(f: FlagVector) -> GVector:
    return g_vector(dual(f))


def is_effective(s: IndexSet, f: FlagVector) -> bool:
    """True iff ``g_k`` of ``f`` and of its polar are both non-negative for all ``k`` in ``s``."""
    if s.degree != f.degree:
        raise ValueError(f"index set has degree {s.degree}, flag vector has {f.degree}")
    if not s:
        return True
    g, gd = g_vector(f), g_dual(f)
    return all(g.values[k] >= 0 and gd.values[k] >= 0 for k in s)


@dataclass(frozen=True)
class ClosureReport:
    premise: bool
    # None when the premise fails; otherwise {"C": bool, "I": bool, "B": bool}
    results: dict | None

    @property
    def holds(self) -> bool:
        return not self.premise or all(self.results.values())

    @property
    def status(self) -> str:
        if not self.premise:
            return "premise failed"
        return "ok" if self.holds else "fails on " + ",".join(k for k, v in self.results.items() if not v)


def effective_closure_check(s_d: IndexSet, s_d1: IndexSet, f: FlagVector) -> ClosureReport:
    """Given ``s_d`` effective on ``f``, is ``s_d1`` effective on ``Cf``, ``If`` and ``Bf``?"""
    if s_d.degree != f.degree or s_d1.degree != f.degree + 1:
        raise ValueError(
            f"expected index sets of degree {f.degree} and {f.degree + 1}, "
            f"got {s_d.degree} and {s_d1.degree}"
        )
    if not is_effective(s_d, f):
        return ClosureReport(False, None)
    results = {"C": is_effective(s_d1, cone(f)), "I": is_effective(s_d1, prism(f))}
    results["B"] = is_effective(s_d1, bipyramid(f)) if f.degree >= 1 else True
    return ClosureReport(True, results)


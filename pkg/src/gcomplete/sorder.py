"""The singularity partial order on Fibonacci indexes of one degree.

Generated, inside any concatenation context, by

* shifting:  ``(a,c)(b,e+1) < (a,c+1)(b,e)``
* splitting: ``(a+b+1, c+1) < (a,0)(b,c)``

and closed reflexively and transitively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._cache import per_degree
from .words import FibonacciIndex, enumerate_indexes

__all__ = [
    "OrderCycleError",
    "OrderRelation",
    "shift_moves",
    "split_moves",
    "generating_edges",
    "build_order",
    "leq",
    "hasse",
    "order_to_dot",
]


class OrderCycleError(RuntimeError):
    """The transitive closure of the generators is not antisymmetric."""


def shift_moves(k: FibonacciIndex):
    """Indexes ``v`` with ``k < v`` by one shifting step."""
    for n in range(len(k) - 1):
        (a, c), (b, e) = k[n], k[n + 1]
        if e >= 1:
            yield FibonacciIndex(k[:n] + ((a, c + 1), (b, e - 1)) + k[n + 2:])


def split_moves(k: FibonacciIndex):
    """Indexes ``v`` with ``k < v`` by one splitting step."""
    for n, (i, j) in enumerate(k):
        if i >= 1 and j >= 1:
            for a in range(i):
                yield FibonacciIndex(k[:n] + ((a, 0), (i - 1 - a, j - 1)) + k[n + 1:])


def generating_edges(d: int) -> list[tuple[FibonacciIndex, FibonacciIndex]]:
    """All generator instances ``(u, v)``, ``u < v``, among degree-``d`` indexes."""
    edges = []
    for u in enumerate_indexes(d):
        for v in (*shift_moves(u), *split_moves(u)):
            if v.degree != d:
                raise AssertionError(f"generator changed degree: {u} -> {v}")
            edges.append((u, v))
    return edges


@dataclass(frozen=True, eq=False)
class OrderRelation:
    degree: int
    indexes: tuple
    matrix: np.ndarray  # matrix[a, b] is True iff indexes[a] <= indexes[b]

    def position(self, k) -> int:
        return self._pos[FibonacciIndex(k)]

    @cached_property
    def _pos(self):
        return {k: n for n, k in enumerate(self.indexes)}

    def leq(self, k, l) -> bool:
        return bool(self.matrix[self.position(k), self.position(l)])

    def up_set(self, k) -> list[FibonacciIndex]:
        row = self.matrix[self.position(k)]
        return [l for l, flag in zip(self.indexes, row) if flag]

    def comparable_pairs(self) -> list[tuple[FibonacciIndex, FibonacciIndex]]:
        """All strict pairs ``k < l`` in canonical order."""
        a, b = np.nonzero(self.matrix & ~np.eye(len(self.indexes), dtype=bool))
        return [(self.indexes[i], self.indexes[j]) for i, j in zip(a, b)]

    def linear_extension(self) -> list[FibonacciIndex]:
        """Indexes sorted so every ``k < l`` has ``k`` first (by up-set size, descending)."""
        sizes = self.matrix.sum(axis=1)
        order = sorted(range(len(self.indexes)), key=lambda n: (-sizes[n], n))
        return [self.indexes[n] for n in order]


@per_degree
def build_order(d: int) -> OrderRelation:
    indexes = enumerate_indexes(d)
    pos = {k: n for n, k in enumerate(indexes)}
    n = len(indexes)
    m = np.eye(n, dtype=bool)
    for u, v in generating_edges(d):
        m[pos[u], pos[v]] = True
    for k in range(n):
        m |= np.outer(m[:, k], m[k, :])
    both = m & m.T
    if not np.array_equal(both, np.eye(n, dtype=bool)):
        a, b = next((a, b) for a, b in zip(*np.nonzero(both)) if a != b)
        raise OrderCycleError(f"cycle through {indexes[a]} and {indexes[b]} at degree {d}")
    m.setflags(write=False)
    return OrderRelation(d, indexes, m)


def leq(k, l) -> bool:
    """``k <= l`` in the singularity order."""
    k, l = FibonacciIndex(k), FibonacciIndex(l)
    if k.degree != l.degree:
        raise ValueError(f"degree mismatch: {k} has degree {k.degree}, {l} has {l.degree}")
    return build_order(k.degree).leq(k, l)


def hasse(d: int) -> list[tuple[FibonacciIndex, FibonacciIndex]]:
    """Covering pairs ``(k, l)``, ``k`` covered by ``l``."""
    rel = build_order(d)
    strict = rel.matrix & ~np.eye(len(rel.indexes), dtype=bool)
    two_step = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    cover = strict & ~two_step
    return [(rel.indexes[a], rel.indexes[b]) for a, b in zip(*np.nonzero(cover))]


def order_to_dot(d: int) -> str:
    lines = [f'digraph "order_{d}" {{', "  rankdir=BT;"]
    for k in enumerate_indexes(d):
        lines.append(f'  "{k}" [label="{k}\\n{k.word}"];')
    for k, l in hasse(d):
        lines.append(f'  "{k}" -> "{l}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Face lattices built combinatorially, used as an independent flag-count oracle.

A :class:`FaceLattice` is a graded bounded poset given by its rank function
and its upward covering relation.  The empty face has rank -1 and the
polytope itself rank ``d``.  Flags are counted from the lattice alone, with no
reference to the linear operators in :mod:`gcomplete.flagops`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .flagops import FlagVector
from .words import parse_word

__all__ = [
    "MalformedLatticeError",
    "FaceLattice",
    "point_lattice",
    "pyramid",
    "prism_lattice",
    "bipyramid_lattice",
    "order_dual",
    "lattice_of_word",
    "flags_of_lattice",
    "is_eulerian",
    "toric_g_of_lattice",
]


class MalformedLatticeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FaceLattice:
    ranks: tuple
    covers: tuple  # covers[x] lists the elements covering x

    def __post_init__(self):
        if len(self.ranks) != len(self.covers):
            raise MalformedLatticeError("ranks and covers differ in length")

    def __len__(self):
        return len(self.ranks)

    @property
    def dim(self) -> int:
        return max(self.ranks)

    @cached_property
    def bottom(self) -> int:
        return self.ranks.index(-1)

    @cached_property
    def top(self) -> int:
        return self.ranks.index(self.dim)

    def validate(self) -> "FaceLattice":
        """Check boundedness and gradedness; raise :class:`MalformedLatticeError`."""
        n = len(self)
        if n == 0:
            raise MalformedLatticeError("empty lattice")
        if self.ranks.count(-1) != 1 or min(self.ranks) != -1:
            raise MalformedLatticeError("need exactly one element of rank -1")
        if self.ranks.count(self.dim) != 1:
            raise MalformedLatticeError("need exactly one element of top rank")
        has_lower = [False] * n
        for x, ups in enumerate(self.covers):
            for y in ups:
                if not 0 <= y < n:
                    raise MalformedLatticeError(f"cover {x} -> {y} out of range")
                if self.ranks[y] != self.ranks[x] + 1:
                    raise MalformedLatticeError(f"cover {x} -> {y} does not raise rank by one")
                has_lower[y] = True
            if not ups and x != self.top:
                raise MalformedLatticeError(f"element {x} is maximal but not the top")
        for x in range(n):
            if not has_lower[x] and x != self.bottom:
                raise MalformedLatticeError(f"element {x} is minimal but not the bottom")
        return self

    @cached_property
    def order_matrix(self) -> np.ndarray:
        """``m[x, y]`` is True iff ``x <= y``."""
        n = len(self)
        m = np.zeros((n, n), dtype=bool)
        for x in sorted(range(n), key=lambda e: -self.ranks[e]):
            m[x, x] = True
            for y in self.covers[x]:
                m[x] |= m[y]
        m.setflags(write=False)
        return m

    def rank_levels(self) -> list[np.ndarray]:
        r = np.asarray(self.ranks)
        return [np.nonzero(r == k)[0] for k in range(-1, self.dim + 1)]

    def face_counts(self) -> list[int]:
        """``[f_0, ..., f_{d-1}]``."""
        return [self.ranks.count(k) for k in range(self.dim)]

    def to_dot(self, name: str = "lattice") -> str:
        lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
        for x, r in enumerate(self.ranks):
            lines.append(f'  {x} [label="{x} (rank {r})"];')
        for x, ups in enumerate(self.covers):
            for y in ups:
                lines.append(f"  {x} -> {y};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def point_lattice() -> FaceLattice:
    return FaceLattice((-1, 0), ((1,), ()))


def pyramid(lat: FaceLattice) -> FaceLattice:
    """Join with a point: every face F gains a cone CF one rank higher."""
    lat.validate()
    n = len(lat)
    ranks = lat.ranks + tuple(r + 1 for r in lat.ranks)
    covers = tuple(ups + (n + x,) for x, ups in enumerate(lat.covers))
    covers += tuple(tuple(n + y for y in ups) for ups in lat.covers)
    return FaceLattice(ranks, covers)


def prism_lattice(lat: FaceLattice) -> FaceLattice:
    """Product with a segment: faces F x 0, F x 1, F x I for nonempty F."""
    lat.validate()
    bot = lat.bottom
    faces = [x for x in range(len(lat)) if x != bot]
    slot = {x: n for n, x in enumerate(faces)}
    m = len(faces)
    # element layout: 0 is empty; then F x 0, F x 1, F x I blocks
    at0 = lambda x: 1 + slot[x]
    at1 = lambda x: 1 + m + slot[x]
    atI = lambda x: 1 + 2 * m + slot[x]
    ranks = [-1] + [0] * (3 * m)
    covers = [[] for _ in range(1 + 3 * m)]
    for v in lat.covers[bot]:
        covers[0] += [at0(v), at1(v)]
    for x in faces:
        r = lat.ranks[x]
        ranks[at0(x)] = ranks[at1(x)] = r
        ranks[atI(x)] = r + 1
        covers[at0(x)] = [at0(y) for y in lat.covers[x]] + [atI(x)]
        covers[at1(x)] = [at1(y) for y in lat.covers[x]] + [atI(x)]
        covers[atI(x)] = [atI(y) for y in lat.covers[x]]
    return FaceLattice(tuple(ranks), tuple(map(tuple, covers)))


def bipyramid_lattice(lat: FaceLattice) -> FaceLattice:
    """Free sum with a segment: joins F * v, F a proper face, v in {none, apex1, apex2}."""
    lat.validate()
    if lat.dim < 1:
        raise ValueError("the bipyramid over a point is undefined")
    top = lat.top
    proper = [x for x in range(len(lat)) if x != top]
    slot = {x: n for n, x in enumerate(proper)}
    m = len(proper)
    # blocks: F * none, F * apex1, F * apex2, then the new top
    new_top = 3 * m
    ranks = [0] * (3 * m + 1)
    covers = [[] for _ in range(3 * m + 1)]
    ranks[new_top] = lat.dim + 1
    for x in proper:
        r = lat.ranks[x]
        ups = [slot[y] for y in lat.covers[x] if y != top]
        is_facet = top in lat.covers[x]
        ranks[slot[x]] = r
        covers[slot[x]] = ups + [m + slot[x], 2 * m + slot[x]]
        for b in (m, 2 * m):
            ranks[b + slot[x]] = r + 1
            covers[b + slot[x]] = [b + u for u in ups] + ([new_top] if is_facet else [])
    return FaceLattice(tuple(ranks), tuple(map(tuple, covers)))


def order_dual(lat: FaceLattice) -> FaceLattice:
    """Reverse the order; ranks become ``d - 1 - r``."""
    d = lat.dim
    down = [[] for _ in range(len(lat))]
    for x, ups in enumerate(lat.covers):
        for y in ups:
            down[y].append(x)
    return FaceLattice(tuple(d - 1 - r for r in lat.ranks), tuple(map(tuple, down)))


_BUILD = {"C": pyramid, "I": prism_lattice, "B": bipyramid_lattice}


def lattice_of_word(word: str) -> FaceLattice:
    """Face lattice of ``word(pt)`` for a word over ``C, I, B`` ending in ``C``."""
    letters = parse_word(word)
    if letters[-1] != "C":
        raise ValueError(f"innermost letter of {word!r} must be C")
    lat = point_lattice()
    for letter in reversed(letters):
        lat = _BUILD[letter](lat)
    return lat


def flags_of_lattice(lat: FaceLattice) -> FlagVector:
    """Count chains of proper nonempty faces by rank set.

    ``v[S]`` holds, per element of rank ``max(S)``, the number of chains with
    rank set ``S`` ending there; extending by rank ``r`` is one product with
    the incidence matrix between the two rank levels.
    """
    d = lat.dim
    if d == 0:
        return FlagVector(0, [1])
    leq = lat.order_matrix
    levels = lat.rank_levels()[1:-1]  # ranks 0..d-1
    incidence = {}
    for a in range(d):
        for b in range(a + 1, d):
            incidence[a, b] = leq[np.ix_(levels[a], levels[b])].astype(np.int64).T
    f = [0] * (1 << d)
    f[0] = 1
    v = {}
    for mask in range(1, 1 << d):
        hi = mask.bit_length() - 1
        rest = mask & ~(1 << hi)
        if rest == 0:
            vec = np.ones(len(levels[hi]), dtype=np.int64)
        else:
            vec = incidence[rest.bit_length() - 1, hi] @ v[rest]
        v[mask] = vec
        f[mask] = int(vec.sum())
    return FlagVector(d, f)


def is_eulerian(lat: FaceLattice) -> bool:
    """Every interval ``[x, y]`` with ``x < y`` has as many even- as odd-rank elements."""
    leq = lat.order_matrix.astype(np.int64)
    sign = np.where(np.asarray(lat.ranks) % 2 == 0, 1, -1)
    mu = (leq * sign) @ leq
    strict = lat.order_matrix & ~np.eye(len(lat), dtype=bool)
    return not np.any(mu[strict])


def toric_g_of_lattice(lat: FaceLattice) -> list[int]:
    """Toric g-vector by the recursion over lower intervals.

    For each face ``x`` of rank ``n``:
    ``h_x(t) = sum over faces y < x of g_y(t) * (t - 1)^(n - 1 - rank y)``,
    ``g_x`` keeps ``h_i - h_{i-1}`` for ``i <= n // 2``, and the empty face has ``g = 1``.
    """
    leq = lat.order_matrix
    order = sorted(range(len(lat)), key=lambda e: lat.ranks[e])
    g = {}
    for x in order:
        n = lat.ranks[x]
        if n == -1:
            g[x] = np.array([1], dtype=object)
            continue
        h = np.zeros(n + 1, dtype=object)
        for y in order:
            if y == x or not leq[y, x]:
                continue
            term = g[y]
            for _ in range(n - 1 - lat.ranks[y]):
                term = np.convolve(term, np.array([-1, 1], dtype=object))
            h[: len(term)] += term
        g[x] = np.array([h[0]] + [h[i] - h[i - 1] for i in range(1, n // 2 + 1)], dtype=object)
    return [int(v) for v in g[lat.top]]

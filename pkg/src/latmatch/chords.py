"""Chord diagrams (partial matchings) and their lattice-point presentations.

A chord diagram lives on vertices 1..m; each arc (a, b) with a < b is presented
by the two lattice points (a, b) and (b, a), one strictly above and one strictly
below the diagonal x = y.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import ChordError, DegenerateRectangleError

Point = tuple[int, int]
Arc = tuple[int, int]


def mirrored(p: Point) -> Point:
    """Reflection of a point across the diagonal x = y."""
    return (p[1], p[0])


class ArcPairClass(Enum):
    SEPARATED = "separated"
    NESTING = "nesting"
    CROSSING = "crossing"


class RectangleType(Enum):
    I = 1
    II = 2
    III = 3
    IV = 4


@dataclass(frozen=True)
class ChordDiagram:
    """Partial matching: arcs (a, b) with a < b on vertices 1..m, degree <= 1."""

    m: int
    arcs: frozenset[Arc]

    def __init__(self, m: int, arcs):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in arcs))
        if m < 1:
            raise ChordError(f"vertex count must be positive, got {m}")
        seen: set[int] = set()
        for a, b in sorted(self.arcs):
            if not (1 <= a < b <= m):
                raise ChordError(f"arc ({a},{b}) out of range for m={m}")
            for v in (a, b):
                if v in seen:
                    raise ChordError(f"vertex {v} has degree > 1")
                seen.add(v)

    @property
    def isolated(self) -> frozenset[int]:
        used = {v for arc in self.arcs for v in arc}
        return frozenset(v for v in range(1, self.m + 1) if v not in used)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class LatticePresentation:
    """Symmetric off-diagonal point set: (x, y) and (y, x) for each arc."""

    points: frozenset[Point]

    def __init__(self, points):
        object.__setattr__(self, "points", frozenset(tuple(p) for p in points))
        xs: set[int] = set()
        ys: set[int] = set()
        for x, y in self.points:
            if x == y:
                raise ChordError(f"point ({x},{y}) lies on the diagonal")
            if x < 1 or y < 1:
                raise ChordError(f"point ({x},{y}) outside the positive quadrant")
            if (y, x) not in self.points:
                raise ChordError(f"point ({x},{y}) has no mirror partner")
            if x in xs:
                raise ChordError(f"x-component {x} used more than once")
            if y in ys:
                raise ChordError(f"y-component {y} used more than once")
            xs.add(x)
            ys.add(y)

    @property
    def component_values(self) -> frozenset[int]:
        return frozenset(v for p in self.points for v in p)

    def upper_points(self) -> list[Point]:
        """Points strictly above the diagonal, one per arc, sorted by x."""
        return sorted(p for p in self.points if p[0] < p[1])


def to_lattice_presentation(d: ChordDiagram) -> LatticePresentation:
    """Every arc contributes its point and the mirror; isolated vertices none."""
    pts = set()
    for a, b in d.arcs:
        pts.add((a, b))
        pts.add((b, a))
    return LatticePresentation(pts)


def from_lattice_presentation(p: LatticePresentation, m: int) -> ChordDiagram:
    """Inverse of to_lattice_presentation for a given vertex count."""
    for x, y in p.points:
        if x > m or y > m:
            raise ChordError(f"point ({x},{y}) exceeds vertex count m={m}")
    arcs = {(x, y) for x, y in p.points if x < y}
    return ChordDiagram(m, arcs)


def _check_arc(a: Arc) -> Arc:
    x, y = a
    if not x < y:
        raise ChordError(f"arc must be ordered (x, y) with x < y, got {a}")
    return a


def classify_arc_pair(a1: Arc, a2: Arc) -> ArcPairClass:
    """Separated, nesting, or crossing; arcs sharing an endpoint are rejected."""
    _check_arc(a1)
    _check_arc(a2)
    if set(a1) & set(a2):
        raise ChordError(f"arcs {a1} and {a2} share an endpoint")
    (x1, y1), (x2, y2) = sorted((a1, a2))
    if y1 < x2:
        return ArcPairClass.SEPARATED
    if y2 < y1:
        return ArcPairClass.NESTING
    return ArcPairClass.CROSSING


def rectangle_type(v: Point, w: Point) -> RectangleType:
    """Quadrant of w - v: I..IV for (+,+), (-,+), (-,-), (+,-)."""
    dx = w[0] - v[0]
    dy = w[1] - v[1]
    if dx == 0 or dy == 0:
        raise DegenerateRectangleError(f"degenerate rectangle from {v} to {w}")
    if dx > 0:
        return RectangleType.I if dy > 0 else RectangleType.IV
    return RectangleType.II if dy > 0 else RectangleType.III


def _rect_intervals(v: Point, w: Point):
    return (
        (min(v[0], w[0]), max(v[0], w[0])),
        (min(v[1], w[1]), max(v[1], w[1])),
    )


def _rect_in_upper_half(v: Point, w: Point) -> bool:
    # The corner (max x, min y) is the extreme one; x <= y there bounds the rest.
    (x0, x1), (y0, y1) = _rect_intervals(v, w)
    return x1 <= y0


def separated_criteria(v1: Point, v2: Point) -> tuple[bool, bool, bool]:
    """The three equivalent tests for separated arcs, computed independently.

    Returns (arcs separated, rectangle leaves the upper half-plane,
    rectangle meets its mirror); the equivalence is asserted.
    """
    for v in (v1, v2):
        if not v[0] < v[1]:
            raise ChordError(f"point {v} is not strictly above the diagonal")
    if set(v1) & set(v2):
        raise ChordError(f"points {v1} and {v2} share a component value")
    separated = classify_arc_pair(v1, v2) is ArcPairClass.SEPARATED
    leaves_upper = not _rect_in_upper_half(v1, v2)
    (ax0, ax1), (ay0, ay1) = _rect_intervals(v1, v2)
    # mirror rectangle swaps the two intervals
    meets_mirror = ax0 <= ay1 and ay0 <= ax1
    assert separated == leaves_upper == meets_mirror
    return (separated, leaves_upper, meets_mirror)


def _is_nest_chain(arcs: list[Arc]) -> bool:
    """Arcs sorted by left endpoint form x1<...<xk<yk<...<y1."""
    arcs = sorted(arcs)
    for (x1, y1), (x2, y2) in itertools.pairwise(arcs):
        if not (x1 < x2 and y2 < y1):
            return False
    return all(x < y for x, y in arcs)


def _is_crossing_chain(arcs: list[Arc]) -> bool:
    """Arcs sorted by left endpoint form x1<...<xk<y1<...<yk."""
    arcs = sorted(arcs)
    for (x1, y1), (x2, y2) in itertools.pairwise(arcs):
        if not (x1 < x2 and y1 < y2):
            return False
    return not arcs or arcs[-1][0] < arcs[0][1]


def is_k_nesting(d: ChordDiagram) -> int | None:
    """k when all arcs of d form one nesting chain, None otherwise."""
    arcs = d.sorted_arcs()
    if not arcs:
        return None
    chain = _is_nest_chain(arcs)
    # equivalent rectangle criteria, checked independently
    by_pairs = all(
        rectangle_type(v, w) in (RectangleType.II, RectangleType.IV)
        for v, w in itertools.permutations(arcs, 2)
    )
    consecutive = all(
        rectangle_type(v, w) is RectangleType.IV for v, w in itertools.pairwise(arcs)
    )
    assert chain == by_pairs == consecutive
    return len(arcs) if chain else None


def _crossing_witness_criteria(arcs: list[Arc]) -> bool:
    arcs = sorted(arcs)
    by_pairs = all(
        rectangle_type(v, w) in (RectangleType.I, RectangleType.III)
        and _rect_in_upper_half(v, w)
        for v, w in itertools.permutations(arcs, 2)
    )
    consecutive = all(
        rectangle_type(v, w) is RectangleType.I for v, w in itertools.pairwise(arcs)
    ) and (len(arcs) < 2 or _rect_in_upper_half(arcs[0], arcs[-1]))
    assert by_pairs == consecutive
    return by_pairs


def max_crossing(d: ChordDiagram) -> int:
    """Largest k with a k-subset of arcs forming a crossing chain (brute force)."""
    best = 0
    arcs = d.sorted_arcs()
    for k in range(1, len(arcs) + 1):
        for subset in itertools.combinations(arcs, k):
            if _is_crossing_chain(list(subset)):
                best = k
                if k >= 2:
                    assert _crossing_witness_criteria(list(subset))
                break
    return best

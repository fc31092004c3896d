"""Lattice polytopes with axis-parallel oriented edges.

A polytope is determined by its initial and terminal vertex sets: every
coordinate value is used exactly once per side, horizontal edges run from an
initial vertex to the terminal vertex sharing its y, vertical edges run from a
terminal vertex to the initial vertex sharing its x.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .chords import LatticePresentation, mirrored
from .errors import PolytopeError, SelfMirrorComponentError
from .geometry import Arrangement, shoelace_signed_area

Point = tuple[int, int]
Edge = tuple[Point, Point]


@dataclass(frozen=True)
class Permutation:
    """Bijection on 1..n in one-line notation: images[j-1] = image of j."""

    images: tuple[int, ...]

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __len__(self) -> int:
        return len(self.images)

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: apply self first, then other."""
        return Permutation(tuple(other(self(j)) for j in range(1, len(self) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for j, img in enumerate(self.images, start=1):
            inv[img - 1] = j
        return Permutation(tuple(inv))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def reversal(n: int) -> "Permutation":
        """The order-reversing permutation n, n-1, ..., 1."""
        return Permutation(tuple(range(n, 0, -1)))

    def as_points(self) -> frozenset[Point]:
        return frozenset((j, img) for j, img in enumerate(self.images, start=1))


def encode_points(points) -> Permutation:
    """Rank permutation of a point set with distinct x's and distinct y's:
    sort by x, read off the ranks of the y's."""
    pts = sorted(points)
    ys = sorted(p[1] for p in pts)
    rank = {y: k for k, y in enumerate(ys, start=1)}
    return Permutation(tuple(rank[p[1]] for p in pts))


@dataclass(frozen=True)
class LatticePolytope:
    ver0: frozenset[Point]
    ver1: frozenset[Point]

    def __init__(self, ver0, ver1):
        ver0 = frozenset(tuple(p) for p in ver0)
        ver1 = frozenset(tuple(p) for p in ver1)
        object.__setattr__(self, "ver0", ver0)
        object.__setattr__(self, "ver1", ver1)
        if len(ver0) != len(ver1):
            raise PolytopeError(
                f"side sizes differ: {len(ver0)} initial vs {len(ver1)} terminal"
            )
        for side, name in ((ver0, "initial"), (ver1, "terminal")):
            vals = [v for p in side for v in p]
            if len(set(vals)) != len(vals):
                dup = next(v for v in vals if vals.count(v) > 1)
                raise PolytopeError(
                    f"coordinate value {dup} used more than once on the {name} side"
                )
        x0 = {p[0] for p in ver0}
        x1 = {p[0] for p in ver1}
        if x0 != x1:
            off = (x0 ^ x1).pop()
            raise PolytopeError(f"x-component sets differ at value {off}")
        y0 = {p[1] for p in ver0}
        y1 = {p[1] for p in ver1}
        if y0 != y1:
            off = (y0 ^ y1).pop()
            raise PolytopeError(f"y-component sets differ at value {off}")

    @property
    def n(self) -> int:
        return len(self.ver0)

    @cached_property
    def isolated(self) -> frozenset[Point]:
        return self.ver0 & self.ver1

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """x-edges initial -> terminal, y-edges terminal -> initial."""
        by_y1 = {p[1]: p for p in self.ver1}
        by_x1 = {p[0]: p for p in self.ver1}
        out = []
        for v in sorted(self.ver0 - self.ver1):
            out.append((v, by_y1[v[1]]))
            out.append((by_x1[v[0]], v))
        return tuple(out)

    @cached_property
    def components(self) -> tuple[tuple[Point, ...], ...]:
        """Boundary cycles as vertex lists, alternating initial/terminal,
        each starting at its least initial vertex."""
        by_y1 = {p[1]: p for p in self.ver1}
        by_x0 = {p[0]: p for p in self.ver0}
        seen: set[Point] = set()
        cycles = []
        for start in sorted(self.ver0 - self.ver1):
            if start in seen:
                continue
            cyc = []
            v = start
            while True:
                cyc.append(v)
                seen.add(v)
                w = by_y1[v[1]]  # follow the x-edge
                cyc.append(w)
                v = by_x0[w[0]]  # follow the y-edge backwards along orientation
                if v == start:
                    break
            cycles.append(tuple(cyc))
        return tuple(cycles)

    @cached_property
    def arrangement(self) -> Arrangement:
        return Arrangement(self.edges)

    @property
    def is_discrete(self) -> bool:
        """Only isolated vertices (initial and terminal sides coincide)."""
        return self.ver0 == self.ver1

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def is_simple(self) -> bool:
        """One boundary component embedded in the plane."""
        return self.is_connected and not self.arrangement.crossings

    def area_signed(self) -> int:
        return self.arrangement.area_signed()

    def area_abs(self) -> int:
        return self.arrangement.area_abs()

    def component_polytope(self, cycle) -> "LatticePolytope":
        """Sub-polytope consisting of one boundary cycle."""
        v0 = frozenset(cycle[0::2])
        v1 = frozenset(cycle[1::2])
        return LatticePolytope(v0, v1)

    def shoelace_by_components(self) -> int:
        return sum(shoelace_signed_area(list(c)) for c in self.components)


def build_polytope(v0, v1) -> LatticePolytope:
    return LatticePolytope(v0, v1)


def mirror(p: LatticePolytope) -> LatticePolytope:
    """Orientation-reversed reflection across x = y."""
    return LatticePolytope(
        frozenset(mirrored(q) for q in p.ver0),
        frozenset(mirrored(q) for q in p.ver1),
    )


def reverse(p: LatticePolytope) -> LatticePolytope:
    """Orientation reversal: swap initial and terminal vertices."""
    return LatticePolytope(p.ver1, p.ver0)


def rotate(p: LatticePolytope) -> LatticePolytope:
    """Quarter-turn rotation, re-embedded into positive coordinates by rank."""
    def rot(points):
        return [(y, -x) for x, y in points]

    combined = list(rot(p.ver0)) + list(rot(p.ver1))
    values = sorted({v for q in combined for v in q})
    rank = {v: k for k, v in enumerate(values, start=1)}
    v0 = frozenset((rank[x], rank[y]) for x, y in rot(p.ver0))
    v1 = frozenset((rank[x], rank[y]) for x, y in rot(p.ver1))
    return LatticePolytope(v0, v1)


def sigma(p: LatticePolytope, side: int) -> Permutation:
    """Rank encoding of the chosen vertex side (0 = initial, 1 = terminal)."""
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    pts = p.ver0 if side == 0 else p.ver1
    if not pts:
        raise PolytopeError("empty polytope has no rank encoding")
    return encode_points(pts)


def _pair_orbit(pair):
    """Closure of a permutation pair under simultaneous reversal multiplication
    on either side and simultaneous inversion."""
    n = len(pair[0])
    rev = Permutation.reversal(n)
    seen = set()
    frontier = [pair]
    while frontier:
        cur = frontier.pop()
        if cur in seen:
            continue
        seen.add(cur)
        a, b = cur
        frontier.append((rev.then(a), rev.then(b)))
        frontier.append((a.then(rev), b.then(rev)))
        frontier.append((a.inverse(), b.inverse()))
    return seen


def equivalent(p: LatticePolytope, q: LatticePolytope) -> bool:
    """Equality of rank-encoding pairs up to the symmetry orbit."""
    if p.n != q.n:
        raise PolytopeError(f"polytopes not comparable: n={p.n} vs n={q.n}")
    if p.n == 0:
        return True
    orbit = _pair_orbit((sigma(p, 0), sigma(p, 1)))
    return (sigma(q, 0), sigma(q, 1)) in orbit


@dataclass(frozen=True)
class PolytopePair:
    """A polytope together with its mirror; initial vertices of the union form
    the first presentation, terminal vertices the second."""

    p: LatticePolytope
    mirror: LatticePolytope

    def union_edges(self) -> tuple[Edge, ...]:
        return self.p.edges + self.mirror.edges

    def union_ver0(self) -> frozenset[Point]:
        return self.p.ver0 | self.mirror.ver0

    def union_ver1(self) -> frozenset[Point]:
        return self.p.ver1 | self.mirror.ver1


def _union_graph(d: LatticePresentation, d2: LatticePresentation) -> LatticePolytope:
    if {v for q in d.points for v in q} != {v for q in d2.points for v in q}:
        raise PolytopeError("presentations use different component value sets")
    return LatticePolytope(d.points, d2.points)


def associated_polytopes(
    d: LatticePresentation, d2: LatticePresentation, strategy: str = "lex"
) -> list[PolytopePair]:
    """Pairs (P, -P*) covering the union polytope of two presentations.

    Boundary cycles and isolated vertices come in mirror pairs; `lex` assigns
    the half containing the least vertex to P, `disjoint` prefers a choice with
    region-disjoint halves, `all` enumerates every assignment.
    """
    union = _union_graph(d, d2)
    units: list[tuple[frozenset[Point], frozenset[Point]]] = []
    for cyc in union.components:
        units.append((frozenset(cyc[0::2]), frozenset(cyc[1::2])))
    for iso in sorted(union.isolated):
        units.append((frozenset([iso]), frozenset([iso])))

    def unit_mirror(u):
        return (
            frozenset(mirrored(q) for q in u[0]),
            frozenset(mirrored(q) for q in u[1]),
        )

    paired: list[tuple] = []
    remaining = list(units)
    while remaining:
        u = remaining.pop(0)
        mu = unit_mirror(u)
        if mu == u:
            raise SelfMirrorComponentError(
                f"component with vertices {sorted(u[0] | u[1])} is its own mirror"
            )
        if mu not in remaining:
            raise PolytopeError("mirror component missing; presentations corrupt")
        remaining.remove(mu)
        paired.append((u, mu))

    def assemble(choice) -> PolytopePair:
        v0p, v1p, v0m, v1m = set(), set(), set(), set()
        for (u, mu), pick_mirror in zip(paired, choice):
            a, b = (mu, u) if pick_mirror else (u, mu)
            v0p |= a[0]
            v1p |= a[1]
            v0m |= b[0]
            v1m |= b[1]
        return PolytopePair(LatticePolytope(v0p, v1p), LatticePolytope(v0m, v1m))

    def lex_choice():
        out = []
        for u, mu in paired:
            out.append(min(mu[0] | mu[1]) < min(u[0] | u[1]))
        return tuple(out)

    if strategy == "lex":
        return [assemble(lex_choice())]
    if strategy == "all":
        return [
            assemble(choice)
            for choice in itertools.product((False, True), repeat=len(paired))
        ]
    if strategy == "disjoint":
        from .construct import pair_region_disjoint

        for choice in itertools.product((False, True), repeat=len(paired)):
            pair = assemble(choice)
            if pair_region_disjoint(pair):
                return [pair]
        return [assemble(lex_choice())]
    raise ValueError(f"unknown strategy: {strategy}")

"""Rectangle moves on point sets, presentations, and polytopes.

A move replaces one diagonal pair of a rectangle by the other; a mirrored move
applies the move together with its reflection across x = y, which is the
point-set form of exchanging two arcs of a chord diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .chords import LatticePresentation, mirrored
from .errors import DegenerateRectangleError, LatmatchError, StaleMoveError
from .geometry import Rectangle, area_signed, signed_rect_area
from .polytopes import LatticePolytope

Point = tuple[int, int]


@dataclass(frozen=True)
class Move:
    """Corner swap on the rectangle spanned by two current points."""

    v: Point
    w: Point

    def __init__(self, v, w):
        v, w = tuple(v), tuple(w)
        if v[0] == w[0] or v[1] == w[1]:
            raise DegenerateRectangleError(f"degenerate move from {v} to {w}")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    @property
    def rectangle(self) -> Rectangle:
        return Rectangle(self.v, self.w)

    @property
    def added(self) -> tuple[Point, Point]:
        return (self.w[0], self.v[1]), (self.v[0], self.w[1])

    @property
    def cost(self) -> int:
        return self.rectangle.area

    @property
    def signed(self) -> int:
        return signed_rect_area(self.rectangle)


@dataclass(frozen=True)
class MirroredMove:
    """A move paired with its mirror across the diagonal."""

    base: Move

    def __init__(self, base: Move):
        if base.w == mirrored(base.v):
            raise DegenerateRectangleError(
                f"move from {base.v} to its mirror lands on the diagonal"
            )
        object.__setattr__(self, "base", base)

    @property
    def partner(self) -> Move:
        return Move(mirrored(self.base.v), mirrored(self.base.w))

    @property
    def cost(self) -> int:
        return self.base.cost

    @property
    def signed(self) -> int:
        return self.base.signed


def apply_move(state: frozenset[Point], m: Move) -> frozenset[Point]:
    """Remove the move's corners, add the opposite diagonal pair."""
    if m.v not in state or m.w not in state:
        missing = m.v if m.v not in state else m.w
        raise StaleMoveError(f"point {missing} not in current state")
    return (state - {m.v, m.w}) | set(m.added)


def apply_mirrored(d: LatticePresentation, mm: MirroredMove) -> LatticePresentation:
    state = apply_move(d.points, mm.base)
    state = apply_move(state, mm.partner)
    return LatticePresentation(state)


def apply_polytope_move(p: LatticePolytope, m: Move) -> LatticePolytope:
    """Move the initial side; terminal vertices are untouched."""
    return LatticePolytope(apply_move(p.ver0, m), p.ver1)


def apply_any(state: frozenset[Point], mv) -> frozenset[Point]:
    if isinstance(mv, MirroredMove):
        state = apply_move(state, mv.base)
        return apply_move(state, mv.partner)
    return apply_move(state, mv)


@dataclass(frozen=True)
class TransformationSequence:
    """Ordered moves from a declared initial state to a declared terminal one."""

    initial: frozenset[Point]
    moves: tuple
    terminal: frozenset[Point]

    def __init__(self, initial, moves, terminal):
        object.__setattr__(self, "initial", frozenset(tuple(p) for p in initial))
        object.__setattr__(self, "moves", tuple(moves))
        object.__setattr__(self, "terminal", frozenset(tuple(p) for p in terminal))

    def replay(self) -> list[frozenset[Point]]:
        """All intermediate states; raises StaleMoveError with the move index."""
        states = [self.initial]
        for k, mv in enumerate(self.moves):
            try:
                states.append(apply_any(states[-1], mv))
            except StaleMoveError as exc:
                raise StaleMoveError(f"move {k}: {exc}") from exc
        if states[-1] != self.terminal:
            raise StaleMoveError("sequence does not reach its declared terminal state")
        return states

    @property
    def cost(self) -> int:
        return sum(mv.cost for mv in self.moves)

    @property
    def signed(self) -> int:
        return sum(mv.signed for mv in self.moves)

    def is_mirrored(self) -> bool:
        return all(isinstance(mv, MirroredMove) for mv in self.moves)


def sequence_area(s: TransformationSequence) -> tuple[int, int]:
    """(total unsigned cost, total signed area) of a replay-valid sequence.

    For a complete mirrored sequence the signed total must be half the signed
    area of the union polytope joining the two states; this is a theorem about
    the move calculus, so it is asserted rather than trusted.
    """
    s.replay()
    cost, signed = s.cost, s.signed
    if s.is_mirrored() and s.moves:
        union = LatticePolytope(s.initial, s.terminal)
        assert 2 * signed == union.area_signed(), "signed-area identity violated"
    return cost, signed

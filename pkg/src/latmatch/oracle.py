"""Ground-truth exhaustive minimal-area search and instance generation.

Uniform-cost search over move graphs: every rectangle has positive integer
area, so Dijkstra with deterministic tie-breaking returns exact minima and
reproducible witness sequences.
"""

from __future__ import annotations

import heapq
import itertools
import os
from dataclasses import dataclass

from .chords import LatticePresentation, mirrored
from .errors import ResourceBoundError
from .moves import Move, MirroredMove, TransformationSequence, apply_move
from .polytopes import LatticePolytope, Permutation

Point = tuple[int, int]
State = frozenset[Point]

DEFAULT_BOUND = 6
_BOUND_ENV = "LATMATCH_ORACLE_BOUND"


def oracle_bound() -> int:
    return int(os.environ.get(_BOUND_ENV, DEFAULT_BOUND))


def _key(state: State) -> tuple:
    return tuple(sorted(state))


def _polytope_moves(state: State):
    pts = sorted(state)
    for v, w in itertools.combinations(pts, 2):
        yield Move(v, w)


def _chord_moves(state: State):
    pts = sorted(state)
    seen = set()
    for v, w in itertools.combinations(pts, 2):
        if w == mirrored(v):
            continue
        canon = min(_key({v, w}), _key({mirrored(v), mirrored(w)}))
        if canon in seen:
            continue
        seen.add(canon)
        yield MirroredMove(Move(v, w))


def _apply(state: State, mv) -> State:
    if isinstance(mv, MirroredMove):
        return apply_move(apply_move(state, mv.base), mv.partner)
    return apply_move(state, mv)


def _dijkstra(initial: State, target: State, move_gen):
    """dist, parent maps over the reachable move graph from `initial`.

    Ties broken on (cost, state key) so witnesses are machine-independent.
    """
    dist: dict[tuple, int] = {}
    parent: dict[tuple, tuple | None] = {}
    state_of: dict[tuple, State] = {}
    k0 = _key(initial)
    heap = [(0, k0)]
    dist[k0] = 0
    parent[k0] = None
    state_of[k0] = initial
    while heap:
        d, key = heapq.heappop(heap)
        if d > dist[key]:
            continue
        state = state_of[key]
        for mv in move_gen(state):
            nxt = _apply(state, mv)
            nk = _key(nxt)
            nd = d + mv.cost
            if nk not in dist or nd < dist[nk]:
                dist[nk] = nd
                parent[nk] = (key, mv)
                state_of[nk] = nxt
                heapq.heappush(heap, (nd, nk))
    return dist, parent, state_of


def _witness(initial, target, parent):
    moves = []
    key = _key(target)
    while parent[key] is not None:
        key, mv = parent[key]
        moves.append(mv)
    moves.reverse()
    return TransformationSequence(initial, moves, target)


def min_area_polytope(p: LatticePolytope, bound: int | None = None):
    """(exact minimal cost, one witness sequence) from initial to terminal side."""
    bound = oracle_bound() if bound is None else bound
    if p.n > bound:
        raise ResourceBoundError(f"n={p.n} exceeds oracle bound {bound}")
    dist, parent, _ = _dijkstra(p.ver0, p.ver1, _polytope_moves)
    tk = _key(p.ver1)
    assert tk in dist, "terminal state unreachable; invalid instance"
    return dist[tk], _witness(p.ver0, p.ver1, parent)


def min_area_chord(
    d: LatticePresentation, d2: LatticePresentation, bound: int | None = None
):
    """Exact minimum over mirrored-move sequences between two presentations."""
    bound = oracle_bound() if bound is None else bound
    n = len(d.points) // 2
    if n > bound:
        raise ResourceBoundError(f"{n} arcs exceed oracle bound {bound}")
    if {v for p in d.points for v in p} != {v for p in d2.points for v in p}:
        raise ResourceBoundError("presentations use different component sets")
    dist, parent, _ = _dijkstra(d.points, d2.points, _chord_moves)
    tk = _key(d2.points)
    assert tk in dist, "terminal presentation unreachable"
    return dist[tk], _witness(d.points, d2.points, parent)


def count_min_sequences(
    initial: State, target: State, chord_level: bool = False, bound: int | None = None
) -> int:
    """Number of distinct ordered move sequences of minimal total area."""
    bound = oracle_bound() if bound is None else bound
    if len(initial) > 2 * bound:
        raise ResourceBoundError(f"state size {len(initial)} exceeds bound")
    move_gen = _chord_moves if chord_level else _polytope_moves
    dist, _, state_of = _dijkstra(initial, target, move_gen)
    tk = _key(target)
    if tk not in dist:
        return 0
    # count minimal paths in cost order; every move strictly increases cost
    counts: dict[tuple, int] = {_key(initial): 1}
    for key in sorted(dist, key=lambda k: (dist[k], k)):
        c = counts.get(key, 0)
        if c == 0:
            continue
        state = state_of[key]
        base = dist[key]
        for mv in move_gen(state):
            nk = _key(_apply(state, mv))
            if dist[nk] == base + mv.cost and dist[nk] <= dist[tk]:
                counts[nk] = counts.get(nk, 0) + c
    return counts.get(tk, 0)


def count_min_polytope(p: LatticePolytope, bound: int | None = None) -> int:
    if p.is_discrete:
        return 1
    return count_min_sequences(p.ver0, p.ver1, chord_level=False, bound=bound)


@dataclass(frozen=True)
class Instance:
    """Canonical generated polytope: x-values 1..n, y-values n+1..2n."""

    sigma0: Permutation
    sigma1: Permutation

    @property
    def key(self) -> str:
        s0 = "".join(str(i) for i in self.sigma0.images)
        s1 = "".join(str(i) for i in self.sigma1.images)
        return f"{s0}/{s1}"

    def polytope(self) -> LatticePolytope:
        n = len(self.sigma0)
        v0 = frozenset((j, n + self.sigma0(j)) for j in range(1, n + 1))
        v1 = frozenset((j, n + self.sigma1(j)) for j in range(1, n + 1))
        return LatticePolytope(v0, v1)


def generate_instances(n: int, filter_fn=None, dedupe: bool = False):
    """All polytopes with n vertices per side on the canonical coordinate set,
    one per permutation pair; optionally deduplicated by equivalence."""
    seen_orbits: set[frozenset] = set()
    perms = [Permutation(images) for images in itertools.permutations(range(1, n + 1))]
    for s0 in perms:
        for s1 in perms:
            inst = Instance(s0, s1)
            if dedupe:
                from .polytopes import _pair_orbit

                orbit = frozenset(_pair_orbit((s0, s1)))
                if orbit in seen_orbits:
                    continue
                seen_orbits.add(orbit)
            p = inst.polytope()
            if filter_fn is None or filter_fn(p):
                yield inst, p

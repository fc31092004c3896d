"""Constructive minimal-area transformations.

Peeling decomposes a simple polygon into rectangles, one valid move at a time.
General instances are handled by scheduling embedded units (whole components,
or crossing-based loops whose corner acts as a terminal vertex) and consuming
opposite-oriented holes by subtractive backtracking.  A move is *subtractive*
when its rectangle sits inside same-signed nonzero winding, which makes the
remaining absolute area drop by exactly the rectangle area; complete
subtractive sequences are exactly the cost-optimal ones.
"""

from __future__ import annotations

import itertools

from .errors import LatmatchError, NotApplicableError, PolytopeError, StaleMoveError
from .geometry import (
    Arrangement,
    Rectangle,
    boundary_interval_overlap,
    rectangle_cells,
    shoelace_signed_area,
    signed_rect_area,
)
from .moves import Move, TransformationSequence, apply_move, apply_polytope_move
from .polytopes import LatticePolytope, PolytopePair

Point = tuple[int, int]

VER0 = 0
VER1 = 1


# ---------------------------------------------------------------------------
# peeling (simple connected polygons)


def valid_peel(q: LatticePolytope, r: Rectangle) -> bool:
    """True when r sits inside q's region and shares a boundary interval, the
    exact condition for the move to cut r off the region."""
    if r.v not in q.ver0 or r.w not in q.ver0:
        raise PolytopeError("peel corners must be initial vertices")
    return region_contains(q, r) and boundary_interval_overlap(q.edges, r)


def region_contains(q: LatticePolytope, r: Rectangle) -> bool:
    arr = Arrangement(q.edges, extra_points=[r.v, r.w])
    return all(arr.winding(i, j) != 0 for i, j in rectangle_cells(arr, r))


def _interior_side(q: LatticePolytope, v: Point, vx: Point) -> int:
    """+1 if the region lies above the horizontal edge v--vx, else -1."""
    arr = q.arrangement
    x2 = v[0] + vx[0]
    y = v[1]
    above = arr.winding_at(x2, 2 * y + 1)
    below = arr.winding_at(x2, 2 * y - 1)
    if above != 0 and below == 0:
        return 1
    if below != 0 and above == 0:
        return -1
    raise LatmatchError("edge does not bound the region on exactly one side")


def _segment_in_region(arr: Arrangement, y: int, x0: int, x1: int) -> bool:
    """Closed horizontal segment lies in the closed region."""
    lo, hi = min(x0, x1), max(x0, x1)
    for i in range(arr.n_cols):
        cl, cr = arr._gx[i], arr._gx[i + 1]
        if cl >= hi or cr <= lo:
            continue
        cx2 = cl + cr
        if arr.winding_at(cx2, 2 * y + 1) == 0 and arr.winding_at(cx2, 2 * y - 1) == 0:
            return False
    return True


def peel_rectangle(q: LatticePolytope):
    """Canonical peel of a simple connected polygon.

    From the least initial vertex, extend through its horizontal edge to the
    far boundary, then sweep toward the interior until the first horizontal
    edge blocks the swept rectangle.  Returns the rectangle and the pieces of
    the result (trailing entry collects isolated vertices, if any).
    """
    if not q.is_simple or q.is_discrete:
        raise NotApplicableError("peeling requires a simple connected polygon")
    v = min(q.ver0 - q.ver1)
    by_y1 = {p[1]: p for p in q.ver1}
    vprime = by_y1[v[1]]
    arr = q.arrangement
    direction = 1 if vprime[0] > v[0] else -1
    # farthest boundary point straight along the edge keeping the segment inside
    xs = [x for x in arr.xs if (x - vprime[0]) * direction > 0]
    xs.sort(key=lambda x: (x - vprime[0]) * direction)
    u_x = vprime[0]
    for x in xs:
        if _segment_in_region(arr, v[1], v[0], x):
            u_x = x
        else:
            break
    side = _interior_side(q, v, vprime)
    span_lo, span_hi = min(v[0], u_x), max(v[0], u_x)
    levels = sorted(
        {e[0][1] for e in q.edges if e[0][1] == e[1][1]} - {v[1]},
        key=lambda y: (y - v[1]) * side,
    )
    w = None
    for level in levels:
        if (level - v[1]) * side <= 0:
            continue
        for a, b in q.edges:
            if a[1] == b[1] == level:
                lo, hi = min(a[0], b[0]), max(a[0], b[0])
                if min(hi, span_hi) > max(lo, span_lo):
                    end = a if a in q.ver0 else b
                    w = end
                    break
        if w is not None:
            break
    assert w is not None, "no blocking edge found; polygon not simple?"
    rect = Rectangle(v, w)
    assert valid_peel(q, rect), "constructed peel fails the peel criterion"
    result = apply_polytope_move(q, Move(v, w))
    pieces = [result.component_polytope(c) for c in result.components]
    for piece in pieces:
        assert piece.is_simple
    assert rect.area + sum(p.area_abs() for p in pieces) == q.area_abs()
    if result.isolated:
        pieces.append(LatticePolytope(result.isolated, result.isolated))
    return rect, pieces


def transform_simple(q: LatticePolytope) -> TransformationSequence:
    """Peel a simple connected polygon down to isolated vertices; the total
    cost equals the absolute area."""
    if not q.is_simple or q.is_discrete:
        if q.is_discrete:
            return TransformationSequence(q.ver0, (), q.ver1)
        raise NotApplicableError("not a simple connected polygon")
    moves = []
    work = [q]
    while work:
        work.sort(key=lambda piece: min(piece.ver0))
        piece = work.pop(0)
        rect, pieces = peel_rectangle(piece)
        moves.append(Move(rect.v, rect.w))
        work.extend(p for p in pieces if not p.is_discrete)
    seq = TransformationSequence(q.ver0, moves, q.ver1)
    seq.replay()
    assert seq.cost == q.area_abs()
    return seq


# ---------------------------------------------------------------------------
# subtractive moves


def _subtractive_moves(current: LatticePolytope):
    """Moves whose rectangle lies in same-signed nonzero winding; applying one
    shrinks the absolute area by exactly the rectangle area."""
    arr = current.arrangement
    pts = sorted(current.ver0)
    for v, w in itertools.combinations(pts, 2):
        rect = Rectangle(v, w)
        rsign = 1 if signed_rect_area(rect) > 0 else -1
        if all(
            arr.winding(i, j) * rsign >= 1 for i, j in rectangle_cells(arr, rect)
        ):
            yield Move(v, w)


def transform_subtractive(
    initial: frozenset[Point], terminal: frozenset[Point]
) -> TransformationSequence | None:
    """Depth-first search over subtractive moves; None when the absolute area
    is not attainable."""
    target = frozenset(terminal)
    dead: set[frozenset[Point]] = set()

    def dfs(state, acc):
        if state == target:
            return True
        if state in dead:
            return False
        current = LatticePolytope(state, target)
        for mv in _subtractive_moves(current):
            acc.append(mv)
            if dfs(apply_move(state, mv), acc):
                return True
            acc.pop()
        dead.add(state)
        return False

    acc: list[Move] = []
    if not dfs(frozenset(initial), acc):
        return None
    return TransformationSequence(initial, acc, terminal)


def count_subtractive(initial: frozenset[Point], terminal: frozenset[Point]) -> int:
    """Number of complete subtractive sequences (equals the number of minimal
    sequences whenever the absolute area is attainable)."""
    target = frozenset(terminal)
    memo: dict[frozenset[Point], int] = {}

    def count(state):
        if state == target:
            return 1
        if state in memo:
            return memo[state]
        current = LatticePolytope(state, target)
        total = 0
        for mv in _subtractive_moves(current):
            total += count(apply_move(state, mv))
        memo[state] = total
        return total

    return count(frozenset(initial))


def transform_with_holes(q: LatticePolytope, holes) -> TransformationSequence:
    """Transformation of a disk with opposite-oriented holes removed; the cost
    is the outer absolute area minus the hole areas."""
    if not q.is_simple:
        raise NotApplicableError("outer boundary must be a simple polygon")
    if not holes:
        return transform_simple(q)
    q_sign = 1 if q.area_signed() > 0 else -1
    arr = q.arrangement
    v0 = set(q.ver0)
    v1 = set(q.ver1)
    for h in holes:
        if not h.is_simple:
            raise LatmatchError("holes must be simple polygons")
        hs = 1 if h.area_signed() > 0 else -1
        if hs == q_sign:
            raise LatmatchError("hole oriented like the outer boundary")
        sample = min(h.ver0)
        if arr.winding_at(2 * sample[0], 2 * sample[1]) == 0:
            raise LatmatchError("hole lies outside the region")
        v0 |= h.ver0
        v1 |= h.ver1
    for h1, h2 in itertools.combinations(holes, 2):
        s = min(h1.ver0)
        if h2.arrangement.winding_at(2 * s[0], 2 * s[1]) != 0:
            raise LatmatchError("holes are nested")
    seq = transform_subtractive(frozenset(v0), frozenset(v1))
    if seq is None:
        raise LatmatchError("hole configuration admits no area-exact sequence")
    expect = q.area_abs() - sum(h.area_abs() for h in holes)
    assert seq.cost == abs(expect)
    return seq


# ---------------------------------------------------------------------------
# boundary structure: strands, loops, embedded cycles


def _component_path(cycle) -> list[Point]:
    """Closed corner list of one boundary cycle (first corner repeated last)."""
    return list(cycle) + [cycle[0]]


def _segments_of_path(path):
    return list(itertools.pairwise(path))


def _crossings_on_segment(seg, crossings):
    (x1, y1), (x2, y2) = seg
    found = []
    for c in crossings:
        cx, cy = c
        if y1 == y2 == cy and min(x1, x2) < cx < max(x1, x2):
            found.append(c)
        elif x1 == x2 == cx and min(y1, y2) < cy < max(y1, y2):
            found.append(c)
    found.sort(key=lambda c: (abs(c[0] - x1), abs(c[1] - y1)))
    return found


class _Trace:
    """One boundary component as an ordered list of stops: genuine corners and
    crossing passes, with the polyline in between."""

    def __init__(self, cycle, crossings):
        self.items = []  # ('corner', point) / ('cross', point, 'h'|'v')
        path = _component_path(cycle)
        for seg in _segments_of_path(path):
            a, b = seg
            kind = "h" if a[1] == b[1] else "v"
            self.items.append(("corner", a))
            for c in _crossings_on_segment(seg, crossings):
                self.items.append(("cross", c, kind))

    def cross_positions(self):
        pos = {}
        for k, item in enumerate(self.items):
            if item[0] == "cross":
                pos.setdefault(item[1], []).append(k)
        return pos


def polyline_sign(points) -> int:
    area = shoelace_signed_area(points)
    assert area != 0
    return 1 if area > 0 else -1


def _cycle_sign(items) -> int:
    """Orientation sign of a closed run of trace items."""
    poly = [it[1] for it in items]
    dedup = [poly[0]]
    for p in poly[1:]:
        if p != dedup[-1]:
            dedup.append(p)
    return polyline_sign(dedup)


def component_sign(p: LatticePolytope, cycle) -> int:
    return polyline_sign(list(cycle))


# ---------------------------------------------------------------------------
# condition checks


def _strand_graph(p: LatticePolytope):
    """Directed multigraph: nodes are crossings, arcs are crossing-free curve
    runs carrying their polylines.  Crossing-free components come back
    separately as full polylines."""
    crossings = p.arrangement.crossings
    arcs = []
    free = []
    for cycle in p.components:
        trace = _Trace(cycle, crossings)
        idxs = [k for k, it in enumerate(trace.items) if it[0] == "cross"]
        if not idxs:
            free.append([it[1] for it in trace.items])
            continue
        items = trace.items
        m = len(items)
        for a, b in itertools.pairwise(idxs + [idxs[0] + m]):
            run = [items[k % m] for k in range(a, b + 1)]
            arcs.append((items[a % m][1], items[b % m][1], [it[1] for it in run]))
    return arcs, free


def _simple_directed_cycles(arcs):
    """Node-simple directed cycles of the strand graph, as arc index tuples."""
    by_src: dict[Point, list[int]] = {}
    for k, (src, _, _) in enumerate(arcs):
        by_src.setdefault(src, []).append(k)
    cycles = set()

    def extend(start_node, node, used, visited):
        for k in by_src.get(node, ()):
            if k < used[0]:
                continue
            src, dst, _ = arcs[k]
            if dst == start_node:
                cyc = tuple(used[1:] + [k])
                rot = min(cyc[i:] + cyc[:i] for i in range(len(cyc)))
                cycles.add(rot)
            elif dst not in visited:
                extend(start_node, dst, [used[0]] + used[1:] + [k], visited | {dst})

    nodes = sorted(by_src)
    for k0, (src, dst, _) in enumerate(arcs):
        if dst == src:
            cycles.add((k0,))
            continue
        extend(src, dst, [k0, k0], {src, dst})
    return cycles


def embedded_cycle_signs(p: LatticePolytope) -> list[int]:
    """Orientation signs of every embedded closed path in the boundary."""
    arcs, free = _strand_graph(p)
    signs = [polyline_sign(poly) for poly in free]
    for cyc in _simple_directed_cycles(arcs):
        poly: list[Point] = []
        for k in cyc:
            seg = arcs[k][2]
            if poly:
                poly.extend(seg[1:])
            else:
                poly.extend(seg)
        if poly[0] == poly[-1]:
            poly.pop()
        dedup = [poly[0]]
        for q in poly[1:]:
            if q != dedup[-1]:
                dedup.append(q)
        signs.append(polyline_sign(dedup))
    return signs


def same_sign_loops(p: LatticePolytope) -> bool:
    """Every embedded closed path in the boundary has one orientation sign
    (closed-braid-like diagrams)."""
    signs = embedded_cycle_signs(p)
    return len(set(signs)) <= 1


def _edge_hits(e1, e2) -> bool:
    (a1, b1), (a2, b2) = e1, e2
    v1 = a1[0] == b1[0]
    v2 = a2[0] == b2[0]

    def span(a, b):
        return min(a, b), max(a, b)

    if v1 and v2:
        if a1[0] != a2[0]:
            return False
        lo1, hi1 = span(a1[1], b1[1])
        lo2, hi2 = span(a2[1], b2[1])
        return min(hi1, hi2) >= max(lo1, lo2)
    if not v1 and not v2:
        if a1[1] != a2[1]:
            return False
        lo1, hi1 = span(a1[0], b1[0])
        lo2, hi2 = span(a2[0], b2[0])
        return min(hi1, hi2) >= max(lo1, lo2)
    if v2:
        return _edge_hits(e2, e1)
    # e1 vertical, e2 horizontal
    lo, hi = span(a1[1], b1[1])
    lo2, hi2 = span(a2[0], b2[0])
    return lo2 <= a1[0] <= hi2 and lo <= a2[1] <= hi


def pair_region_disjoint(pair: PolytopePair) -> bool:
    """Boundaries share no point and neither region meets the other."""
    e1, e2 = pair.p.edges, pair.mirror.edges
    for u in e1:
        for v in e2:
            if _edge_hits(u, v):
                return False
    if e1 and e2:
        a1 = Arrangement(e1)
        a2 = Arrangement(e2)
        s2 = min(pair.mirror.ver0 - pair.mirror.ver1, default=None)
        s1 = min(pair.p.ver0 - pair.p.ver1, default=None)
        if s2 is not None and a1.winding_at(2 * s2[0], 2 * s2[1]) != 0:
            return False
        if s1 is not None and a2.winding_at(2 * s1[0], 2 * s1[1]) != 0:
            return False
    return True


def _resolution_loops(p: LatticePolytope, turn_at):
    """Loops of the boundary after resolving each crossing to pass or turn.

    Returns per-loop: crossing visits and polyline with turn corners inserted.
    """
    crossings = p.arrangement.crossings
    traces = [_Trace(c, crossings) for c in p.components]
    # darts: (trace index, item index) for crossing items; successor skips to
    # the next crossing along the curve
    succ = {}
    starts = {}
    for t_i, tr in enumerate(traces):
        idxs = [k for k, it in enumerate(tr.items) if it[0] == "cross"]
        if not idxs:
            continue
        m = len(tr.items)
        for a, b in itertools.pairwise(idxs + [idxs[0] + m]):
            run = [(t_i, k % m) for k in range(a + 1, b)]
            succ[(t_i, a)] = ((t_i, b % m), run)
    # pair up the two passes of each crossing
    passes: dict[Point, list] = {}
    for t_i, tr in enumerate(traces):
        for k, it in enumerate(tr.items):
            if it[0] == "cross":
                passes.setdefault(it[1], []).append((t_i, k))
    for c, ps in passes.items():
        assert len(ps) == 2
    nxt = {}
    for c, (p1, p2) in passes.items():
        if c in turn_at:
            nxt[p1] = p2
            nxt[p2] = p1
        else:
            nxt[p1] = p1
            nxt[p2] = p2
    loops = []
    seen = set()
    for start in sorted(succ):
        if start in seen:
            continue
        visits = []
        poly: list[Point] = []
        cur = start
        while True:
            seen.add(cur)
            t_i, k = cur
            c = traces[t_i].items[k][1]
            visits.append(c)
            poly.append(c)
            after, run = succ[cur]
            for (rt, rk) in run:
                poly.append(traces[rt].items[rk][1])
            cur = nxt[after]
            if cur == start:
                break
        loops.append((visits, poly))
    free = []
    for t_i, tr in enumerate(traces):
        if not any(it[0] == "cross" for it in tr.items):
            free.append([it[1] for it in tr.items])
    return loops, free


def _loop_contains(poly, point) -> int:
    """Winding of a closed rectilinear polyline around a point off the line."""
    w = 0
    pts = poly + [poly[0]]
    for (x1, y1), (x2, y2) in itertools.pairwise(pts):
        if x1 == x2 and x1 > point[0]:
            lo, hi = min(y1, y2), max(y1, y2)
            if lo < point[1] < hi:
                w += 1 if y2 > y1 else -1
    return w


def _dedup_poly(poly):
    out = [poly[0]]
    for q in poly[1:]:
        if q != out[-1]:
            out.append(q)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def disjoint_simple_union(pair: PolytopePair) -> bool:
    """Mirror-disjoint, and some crossing resolution splits the boundary into
    embedded loops meeting pairwise in at most one crossing, with
    opposite-oriented components only as plain holes."""
    if not pair_region_disjoint(pair):
        return False
    p = pair.p
    if p.is_discrete:
        return True
    crossings = p.arrangement.crossings
    for turns in itertools.chain.from_iterable(
        itertools.combinations(crossings, r) for r in range(len(crossings) + 1)
    ):
        if _condition2_structure(p, frozenset(turns)):
            return True
    return False


def _condition2_structure(p: LatticePolytope, turn_at) -> bool:
    loops, free = _resolution_loops(p, turn_at)
    units = []
    for visits, poly in loops:
        if len(visits) != len(set(visits)):
            return False  # loop revisits a crossing: not embedded
        dedup = _dedup_poly(poly)
        units.append((set(visits), dedup, polyline_sign(dedup), True))
    for poly in free:
        dedup = _dedup_poly(poly)
        units.append((set(), dedup, polyline_sign(dedup), False))
    for (v1, _, _, _), (v2, _, _, _) in itertools.combinations(units, 2):
        if len(v1 & v2) > 1:
            return False
    # containment forest over the units
    n = len(units)
    inside = [[False] * n for _ in range(n)]
    for i, j in itertools.permutations(range(n), 2):
        vi, pi, _, _ = units[i]
        vj, pj, _, _ = units[j]
        sample = next(q for q in pi if q not in pj)
        inside[i][j] = _loop_contains(pj, sample) != 0
    for i in range(n):
        parents = [j for j in range(n) if inside[i][j]]
        if not parents:
            continue
        direct = min(parents, key=lambda j: sum(inside[j]))
        vi, pi, si, has_cross_i = units[i]
        sj = units[direct][2]
        if si == sj:
            continue
        # opposite-oriented: admissible only as a plain hole
        if has_cross_i or vi:
            return False
        if any(inside[k][i] for k in range(n)):
            return False  # holes must be empty
    return True


# ---------------------------------------------------------------------------
# unit scheduling


def _corner_type_of_interval(start_kind: str) -> int:
    # leaving along the horizontal strand and returning on the vertical one
    # makes the crossing behave as an initial vertex of the loop
    return VER0 if start_kind == "h" else VER1


def _find_ready_unit(trace: _Trace):
    """Embedded loop of one component whose crossing corners all act as
    terminal vertices, found by repeatedly eliding deepest loops."""
    items = list(trace.items)

    def recurse(items):
        m = len(items)
        pos: dict[Point, list[int]] = {}
        for k, it in enumerate(items):
            if it[0] == "cross":
                pos.setdefault(it[1], []).append(k)
        pairs = {c: ks for c, ks in pos.items() if len(ks) == 2}
        if not pairs:
            return items
        # minimal-gap interval is embedded
        best = None
        for c, (k1, k2) in pairs.items():
            for a, b in ((k1, k2), (k2, k1)):
                gap = (b - a) % m
                if best is None or gap < best[0]:
                    best = (gap, a, b, c)
        _, a, b, c = best
        interval = [items[(a + t) % m] for t in range(1, (b - a) % m)]
        start_kind = items[a][2]
        ctype = _corner_type_of_interval(start_kind)
        if ctype == VER1:
            corner = ("corner1", c)
            loop = [corner] + interval
            if all(it[0] != "cross" or it[1] not in pairs for it in interval):
                return loop
            return recurse(loop)
        remainder = [("corner1", c)] + [items[(b + t) % m] for t in range(1, (a - b) % m + 1)]
        return recurse(remainder)

    return recurse(items)


def _unit_polytope(unit_items) -> LatticePolytope:
    """Polytope formed by a closed corner run; crossing corners typed by the
    local turn."""
    poly = []
    for it in unit_items:
        if it[0] in ("corner", "corner1"):
            poly.append(it[1])
        # plain crossing passes are not corners
    poly = _dedup_poly(poly)
    # corners alternate between initial and terminal along the walk; the walk
    # leaves an initial corner horizontally
    v0, v1 = set(), set()
    m = len(poly)
    for k, pt in enumerate(poly):
        nxt = poly[(k + 1) % m]
        if pt[1] == nxt[1]:  # leaves horizontally
            v0.add(pt)
        else:
            v1.add(pt)
    return LatticePolytope(frozenset(v0), frozenset(v1))


def minimal_transformation(p: LatticePolytope) -> TransformationSequence:
    """Sequence of moves from the initial to the terminal side whose total
    cost equals the absolute area; requires one of the two sufficient shape
    conditions, otherwise defers to the exact oracle."""
    pair = PolytopePair(p, _mirror_of(p))
    if not (same_sign_loops(p) or disjoint_simple_union(pair)):
        raise NotApplicableError(
            "neither shape condition holds; use the exact oracle"
        )
    target = p.ver1
    state = p.ver0
    moves: list[Move] = []
    guard = 0
    while state != target:
        guard += 1
        if guard > 4 * len(p.ver0) + 8:
            seq = transform_subtractive(p.ver0, target)
            assert seq is not None, "area-exact sequence must exist here"
            seq.replay()
            assert seq.cost == p.area_abs()
            return seq
        current = LatticePolytope(state, target)
        seq_part = _transform_round(current)
        moves.extend(seq_part.moves)
        for mv in seq_part.moves:
            state = apply_move(state, mv)
    seq = TransformationSequence(p.ver0, moves, target)
    seq.replay()
    assert seq.cost == p.area_abs(), "constructed sequence is not area-exact"
    return seq


def _mirror_of(p):
    from .polytopes import mirror

    return mirror(p)


def _transform_round(current: LatticePolytope) -> TransformationSequence:
    """Transform one ready unit (with its holes) of the current polytope."""
    crossings = current.arrangement.crossings
    comps = list(current.components)
    infos = []
    for cyc in comps:
        trace = _Trace(cyc, crossings)
        selfcross = [c for c, ks in trace.cross_positions().items() if len(ks) == 2]
        sign = polyline_sign(list(cyc))
        infos.append((cyc, trace, selfcross, sign))

    def ambient_sign(k):
        sample = min(infos[k][0])
        w = 0
        for j, (cyc, _, _, _) in enumerate(infos):
            if j != k:
                w += _loop_contains(list(cyc), sample)
        return w

    candidates = []
    for k, (cyc, trace, selfcross, sign) in enumerate(infos):
        if selfcross:
            unit_items = _find_ready_unit(trace)
            candidates.append((min(cyc), k, unit_items))
        else:
            amb = ambient_sign(k)
            if amb == 0 or (amb > 0) == (sign > 0):
                unit_items = [
                    it for it in trace.items if it[0] == "corner"
                ]
                candidates.append((min(cyc), k, unit_items))
    if not candidates:
        raise LatmatchError("no ready unit found")
    candidates.sort(key=lambda t: t[0])
    _, k_sel, unit_items = candidates[0]
    unit = _unit_polytope(unit_items)
    unit_poly = _dedup_poly([it[1] for it in unit_items if it[0] in ("corner", "corner1")])
    unit_sign = polyline_sign(unit_poly)
    # holes: embedded opposite components directly inside the unit
    holes = []
    for j, (cyc, _, selfcross, sign) in enumerate(infos):
        if j == k_sel or selfcross or sign == unit_sign:
            continue
        sample = min(cyc)
        if _loop_contains(unit_poly, sample) == 0:
            continue
        covered = False
        for j2, (cyc2, _, _, _) in enumerate(infos):
            if j2 in (j, k_sel):
                continue
            if _loop_contains(list(cyc2), sample) != 0 and _loop_contains(
                unit_poly, min(cyc2)
            ) != 0:
                covered = True
        if not covered:
            holes.append(current.component_polytope(cyc))
    if holes:
        v0 = set(unit.ver0)
        v1 = set(unit.ver1)
        for h in holes:
            v0 |= h.ver0
            v1 |= h.ver1
        seq = transform_subtractive(frozenset(v0), frozenset(v1))
        if seq is None:
            raise LatmatchError("unit with holes admits no area-exact sequence")
        return seq
    return transform_simple(unit)


# ---------------------------------------------------------------------------
# divisions and counting


def enumerate_divisions(q: LatticePolytope):
    """All maximal sequences of valid peels of a simple connected polygon,
    labelled by application order."""
    if not q.is_simple and not q.is_discrete:
        raise NotApplicableError("divisions are defined for simple polygons")
    out = []

    def dfs(state, acc):
        if state == q.ver1:
            out.append(tuple(acc))
            return
        current = LatticePolytope(state, q.ver1)
        for v, w in itertools.combinations(sorted(state - q.ver1), 2):
            rect = Rectangle(v, w)
            if valid_peel(current, rect):
                acc.append(rect)
                dfs(apply_move(state, Move(v, w)), acc)
                acc.pop()

    dfs(q.ver0, [])
    return out


def count_minimal(p: LatticePolytope, bound: int | None = None) -> int:
    """Number of minimal-cost ordered sequences; counted over the subtractive
    move graph when the absolute area is attainable, by exhaustive search
    otherwise."""
    if p.is_discrete:
        return 1
    c = count_subtractive(p.ver0, p.ver1)
    if c > 0:
        return c
    from .oracle import count_min_polytope

    return count_min_polytope(p, bound=bound)

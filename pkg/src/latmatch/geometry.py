"""Exact integer arrangements of oriented axis-parallel edges.

Winding numbers are computed by ray casting on a compressed grid; all areas are
exact integers, no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DegenerateRectangleError, LatmatchError

Point = tuple[int, int]
Edge = tuple[Point, Point]


@dataclass(frozen=True)
class Rectangle:
    """Axis-parallel rectangle given by one diagonal pair of corners."""

    v: Point
    w: Point

    def __init__(self, v, w):
        v = tuple(v)
        w = tuple(w)
        if v[0] == w[0] or v[1] == w[1]:
            raise DegenerateRectangleError(f"degenerate rectangle from {v} to {w}")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    @property
    def other_diagonal(self) -> tuple[Point, Point]:
        return (self.w[0], self.v[1]), (self.v[0], self.w[1])

    @property
    def x_span(self) -> tuple[int, int]:
        return min(self.v[0], self.w[0]), max(self.v[0], self.w[0])

    @property
    def y_span(self) -> tuple[int, int]:
        return min(self.v[1], self.w[1]), max(self.v[1], self.w[1])

    @property
    def area(self) -> int:
        return abs(self.w[0] - self.v[0]) * abs(self.w[1] - self.v[1])


def signed_rect_area(r: Rectangle) -> int:
    """Area signed by the orientation v -> (x(w), y(v)) -> w -> (x(v), y(w)).

    Positive exactly when w - v points into the first or third quadrant.
    """
    dx = r.w[0] - r.v[0]
    dy = r.w[1] - r.v[1]
    return dx * dy


def _edge_checked(e: Edge) -> Edge:
    (x1, y1), (x2, y2) = e
    if x1 != x2 and y1 != y2:
        raise LatmatchError(f"edge {e} is not axis-parallel")
    if (x1, y1) == (x2, y2):
        raise LatmatchError(f"edge {e} has zero length")
    return e


class Arrangement:
    """Grid decomposition of the plane induced by an oriented edge set."""

    def __init__(self, edges, extra_points=()):
        self.edges = [_edge_checked((tuple(a), tuple(b))) for a, b in edges]
        xs = {p[0] for e in self.edges for p in e} | {p[0] for p in extra_points}
        ys = {p[1] for e in self.edges for p in e} | {p[1] for p in extra_points}
        if not xs:
            xs, ys = {0}, {0}
        # pad with one unbounded ring so every outer cell is genuinely outside
        self.xs = sorted(xs)
        self.ys = sorted(ys)
        self._gx = [self.xs[0] - 1] + self.xs + [self.xs[-1] + 1]
        self._gy = [self.ys[0] - 1] + self.ys + [self.ys[-1] + 1]
        self._verticals = [
            (a[0], min(a[1], b[1]), max(a[1], b[1]), 1 if b[1] > a[1] else -1)
            for a, b in self.edges
            if a[0] == b[0]
        ]
        self._horizontals = [
            (a[1], min(a[0], b[0]), max(a[0], b[0]), 1 if b[0] > a[0] else -1)
            for a, b in self.edges
            if a[1] == b[1]
        ]
        self._omega = [
            [self._ray_cast(i, j) for j in range(len(self._gy) - 1)]
            for i in range(len(self._gx) - 1)
        ]

    def _ray_cast(self, i: int, j: int) -> int:
        # winding = signed count of vertical edges crossed by the +x ray
        cx2 = self._gx[i] + self._gx[i + 1]
        cy2 = self._gy[j] + self._gy[j + 1]
        w = 0
        for x, y0, y1, d in self._verticals:
            if 2 * x > cx2 and 2 * y0 < cy2 < 2 * y1:
                w += d
        return w

    @property
    def n_cols(self) -> int:
        return len(self._gx) - 1

    @property
    def n_rows(self) -> int:
        return len(self._gy) - 1

    def cell_area(self, i: int, j: int) -> int:
        return (self._gx[i + 1] - self._gx[i]) * (self._gy[j + 1] - self._gy[j])

    def winding(self, i: int, j: int) -> int:
        return self._omega[i][j]

    def cells(self):
        for i in range(self.n_cols):
            for j in range(self.n_rows):
                yield i, j

    def winding_at(self, x2: int, y2: int) -> int:
        """Winding at the point (x2/2, y2/2), which must avoid all edges."""
        w = 0
        for x, y0, y1, d in self._verticals:
            if 2 * x > x2 and 2 * y0 < y2 < 2 * y1:
                w += d
        return w

    def cell_containing(self, x2: int, y2: int) -> tuple[int, int] | None:
        """Cell whose interior contains (x2/2, y2/2), None if on a grid line."""
        for i in range(self.n_cols):
            if 2 * self._gx[i] < x2 < 2 * self._gx[i + 1]:
                for j in range(self.n_rows):
                    if 2 * self._gy[j] < y2 < 2 * self._gy[j + 1]:
                        return i, j
        return None

    @cached_property
    def crossings(self) -> list[Point]:
        """Transverse interior intersections of vertical and horizontal edges."""
        pts = []
        for x, y0, y1, _ in self._verticals:
            for y, x0, x1, _ in self._horizontals:
                if x0 < x < x1 and y0 < y < y1:
                    pts.append((x, y))
        return sorted(pts)

    def area_signed(self) -> int:
        return sum(
            self.winding(i, j) * self.cell_area(i, j) for i, j in self.cells()
        )

    def area_abs(self) -> int:
        return sum(
            abs(self.winding(i, j)) * self.cell_area(i, j) for i, j in self.cells()
        )

    def check_outer_zero(self) -> bool:
        ring = [(0, j) for j in range(self.n_rows)]
        ring += [(self.n_cols - 1, j) for j in range(self.n_rows)]
        ring += [(i, 0) for i in range(self.n_cols)]
        ring += [(i, self.n_rows - 1) for i in range(self.n_cols)]
        return all(self.winding(i, j) == 0 for i, j in ring)

    def _segment_edge_multiplicity(self, i: int, j: int, side: str) -> int:
        """Net multiplicity of edges on the grid segment between two cells."""
        if side == "right":
            x = self._gx[i + 1]
            y0, y1 = self._gy[j], self._gy[j + 1]
            return sum(d for (ex, ey0, ey1, d) in self._verticals if ex == x and ey0 <= y0 and ey1 >= y1)
        if side == "top":
            y = self._gy[j + 1]
            x0, x1 = self._gx[i], self._gx[i + 1]
            return sum(d for (ey, ex0, ex1, d) in self._horizontals if ey == y and ex0 <= x0 and ex1 >= x1)
        raise ValueError(side)

    def _segment_has_edge(self, i: int, j: int, side: str) -> bool:
        if side == "right":
            x = self._gx[i + 1]
            y0, y1 = self._gy[j], self._gy[j + 1]
            return any(ex == x and ey0 <= y0 and ey1 >= y1 for (ex, ey0, ey1, _) in self._verticals)
        if side == "top":
            y = self._gy[j + 1]
            x0, x1 = self._gx[i], self._gx[i + 1]
            return any(ey == y and ex0 <= x0 and ex1 >= x1 for (ey, ex0, ex1, _) in self._horizontals)
        raise ValueError(side)

    @cached_property
    def faces(self) -> list[frozenset[tuple[int, int]]]:
        """Connected regions of the complement: cells merged across edge-free
        grid segments. The face containing the outer ring comes first."""
        parent: dict[tuple[int, int], tuple[int, int]] = {c: c for c in self.cells()}

        def find(c):
            while parent[c] != c:
                parent[c] = parent[parent[c]]
                c = parent[c]
            return c

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for i, j in self.cells():
            if i + 1 < self.n_cols and not self._segment_has_edge(i, j, "right"):
                union((i, j), (i + 1, j))
            if j + 1 < self.n_rows and not self._segment_has_edge(i, j, "top"):
                union((i, j), (i, j + 1))
        groups: dict[tuple[int, int], set] = {}
        for c in self.cells():
            groups.setdefault(find(c), set()).add(c)
        outer_root = find((0, 0))
        ordered = [frozenset(groups.pop(outer_root))]
        ordered.extend(frozenset(g) for _, g in sorted(groups.items()))
        return ordered

    def face_winding(self, face) -> int:
        ws = {self.winding(i, j) for i, j in face}
        assert len(ws) == 1, "face with inconsistent winding"
        return ws.pop()


def area_signed(edges, extra_points=()) -> int:
    return Arrangement(edges, extra_points).area_signed()


def area_abs(edges, extra_points=()) -> int:
    return Arrangement(edges, extra_points).area_abs()


def rectangle_cells(arr: Arrangement, r: Rectangle):
    """Cells of arr whose interiors lie inside r (grid must refine r)."""
    x0, x1 = r.x_span
    y0, y1 = r.y_span
    for i, j in arr.cells():
        if x0 <= arr._gx[i] and arr._gx[i + 1] <= x1 and y0 <= arr._gy[j] and arr._gy[j + 1] <= y1:
            yield i, j


def region_contains_rectangle(edges, r: Rectangle) -> bool:
    """True when every cell of r's interior has nonzero winding (closed region)."""
    arr = Arrangement(edges, extra_points=[r.v, r.w])
    return all(arr.winding(i, j) != 0 for i, j in rectangle_cells(arr, r))


def boundary_interval_overlap(edges, r: Rectangle) -> bool:
    """True when the rectangle boundary shares a positive-length segment with
    some edge."""
    (x0, x1), (y0, y1) = r.x_span, r.y_span
    for (a, b) in edges:
        if a[1] == b[1] and a[1] in (y0, y1):  # horizontal edge on top/bottom line
            lo, hi = min(a[0], b[0]), max(a[0], b[0])
            if min(hi, x1) > max(lo, x0):
                return True
        if a[0] == b[0] and a[0] in (x0, x1):
            lo, hi = min(a[1], b[1]), max(a[1], b[1])
            if min(hi, y1) > max(lo, y0):
                return True
    return False


def shoelace_signed_area(cycle: list[Point]) -> int:
    """Twice-free exact signed area of a closed lattice cycle (integer result
    for rectilinear cycles)."""
    s = 0
    n = len(cycle)
    for k in range(n):
        x1, y1 = cycle[k]
        x2, y2 = cycle[(k + 1) % n]
        s += x1 * y2 - x2 * y1
    assert s % 2 == 0
    return s // 2

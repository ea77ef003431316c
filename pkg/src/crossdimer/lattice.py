"""Square grid and cross-lattice geometry.

The cross lattice (grid "B") is the square grid with two adjacent vertical
edges deleted per period: for every base point beta of the lattice
L = {(4i+2j, 2j)}, the edges (bx+1, by)-(bx+1, by+1) and
(bx+2, by)-(bx+2, by+1) are absent.  Equivalently it is glued from
14-edge cross patterns, one per diamond of the tiling with centers at
beta + (1/2, 1/2).  The edge table and every trim/strip rule below were
frozen by exhaustive calibration against the closed-form counts; the
acceptance suite re-verifies the transcription end to end.

Contours anchor at cross centers, which sit at half-integer points, so
polygon corners are stored in doubled coordinates: one diagonal step of a
contour side is (+-2, +-2), one horizontal unit is (+-2, 0), and a lattice
vertex (x, y) appears as (2x, 2y).
"""

from __future__ import annotations

from dataclasses import dataclass

from .matchcount import Graph


class NonClosing(Exception):
    pass


class SelfIntersecting(Exception):
    pass


class NotHorizontalSide(Exception):
    pass


COMPASS = {
    "E": (1, 0), "W": (-1, 0), "N": (0, 1), "S": (0, -1),
    "NE": (1, 1), "NW": (-1, 1), "SE": (1, -1), "SW": (-1, -1),
}

# One cross, as edges between lattice points relative to its base point
# (the lattice point just south-west of the cross center).  The pattern is
# the five-square plus shape with its east arm sliced open: of the sixteen
# grid edges inside the diamond, the east central-square edge and the east
# tip edge are missing.
CROSS_EDGES = frozenset((
    ((0, 0), (1, 0)), ((0, 1), (1, 1)),        # central square, horizontals
    ((0, 0), (0, 1)),                          # central square, west side
    ((1, 0), (2, 0)), ((1, 1), (2, 1)),        # east arm (open: no tip)
    ((-1, 0), (0, 0)), ((-1, 1), (0, 1)),      # west arm
    ((-1, 0), (-1, 1)),                        # west tip
    ((0, 1), (0, 2)), ((1, 1), (1, 2)),        # north arm
    ((0, 2), (1, 2)),                          # north tip
    ((0, -1), (0, 0)), ((1, -1), (1, 0)),      # south arm
    ((0, -1), (1, -1)),                        # south tip
))

PERIOD_VECTORS = ((4, 0), (2, 2))


@dataclass(frozen=True)
class LatticeSpec:
    """Either the full square grid or a periodic cross lattice."""

    kind: str  # "full" | "cross"
    cross_table: frozenset = CROSS_EDGES
    periods: tuple = PERIOD_VECTORS
    anchor: tuple = (0, 0)

    def __post_init__(self):
        if self.kind == "cross":
            pts = frozenset(p for e in self.cross_table for p in e)
            object.__setattr__(self, "_offsets", pts)

    def is_base(self, p):
        """True iff p is a cross base point (center at p + (1/2, 1/2))."""
        bx, by = p[0] - self.anchor[0], p[1] - self.anchor[1]
        return bx % 2 == 0 and by % 2 == 0 and (bx - by) % 4 == 0

    def _owning_base(self, mx2, my2):
        """Base of the diamond owning the point with doubled coords (mx2, my2)."""
        by0 = (my2 // 2) & ~1
        bx0 = (mx2 // 2) & ~1
        for dy in (0, -2, 2):
            by = by0 + dy
            for dx in (-3, -2, -1, 0, 1, 2, 3):
                bx = bx0 + dx
                if bx % 2 or (bx - self.anchor[0] - (by - self.anchor[1])) % 4:
                    continue
                if abs(mx2 - 2 * bx - 1) + abs(my2 - 2 * by - 1) <= 3:
                    return (bx, by)
        raise AssertionError("no owning diamond found")

    def has_vertex(self, p):
        if self.kind == "full":
            return True
        x, y = p
        for bx in range(x - 2, x + 3):
            for by in range(y - 2, y + 3):
                if self.is_base((bx, by)) and \
                        (x - bx, y - by) in self._offsets:
                    return True
        return False

    def edge_exists(self, p, q):
        """True iff {p, q} is an edge of this lattice; symmetric in p, q."""
        dx, dy = q[0] - p[0], q[1] - p[1]
        if abs(dx) + abs(dy) != 1:
            return False
        if self.kind == "full":
            return True
        bx, by = self._owning_base(p[0] + q[0], p[1] + q[1])
        a = (p[0] - bx, p[1] - by)
        b = (q[0] - bx, q[1] - by)
        return (min(a, b), max(a, b)) in self.cross_table

    def edge_offset(self, p, q):
        """Position of the edge {p, q} within its cross, as a table key."""
        bx, by = self._owning_base(p[0] + q[0], p[1] + q[1])
        a = (p[0] - bx, p[1] - by)
        b = (q[0] - bx, q[1] - by)
        return (min(a, b), max(a, b))


FULL_GRID = LatticeSpec(kind="full")
GRID_B = LatticeSpec(kind="cross")


def edge_exists(lat, p, q):
    return lat.edge_exists(p, q)


# -- contours --------------------------------------------------------------------


@dataclass(frozen=True)
class ContourSpec:
    """Closed polyline spec: a start base point and compass sides.

    Side lengths are in lattice units (diagonal sides count diagonal unit
    steps); the traced polygon itself lives at half-unit offsets, through
    the cross center start + (1/2, 1/2).
    """

    family: str
    start: tuple
    sides: tuple  # ((compass, length), ...)


def trace_contour(spec):
    """Corners of the closed polygon, in doubled coordinates.

    Validates closure, simplicity, and the side-length conventions
    (diagonal sides even, horizontal sides divisible by 4).
    """
    x = 2 * spec.start[0] + 1
    y = 2 * spec.start[1] + 1
    corners = [(x, y)]
    seen_midpoints = set()
    total = 0
    for comp, length in spec.sides:
        if length < 0:
            raise ValueError("negative side length")
        dx, dy = COMPASS[comp]
        diagonal = dx != 0 and dy != 0
        if length and diagonal and length % 2:
            raise SelfIntersecting(f"odd diagonal step count {length}")
        if length and not diagonal and length % 4:
            raise SelfIntersecting(f"horizontal length {length} not 4-aligned")
        for _ in range(length):
            mid = (2 * x + 2 * dx, 2 * y + 2 * dy)
            if mid in seen_midpoints:
                raise SelfIntersecting(f"boundary passes twice through {mid}")
            seen_midpoints.add(mid)
            x, y = x + 2 * dx, y + 2 * dy
        total += length
        corners.append((x, y))
    if total == 0:
        raise SelfIntersecting("degenerate empty polygon")
    if corners[-1] != corners[0]:
        raise NonClosing(f"ends at {corners[-1]}, started at {corners[0]}")
    return corners


def _segments(corners2):
    return [(corners2[i], corners2[i + 1]) for i in range(len(corners2) - 1)
            if corners2[i] != corners2[i + 1]]


def on_boundary(corners2, p):
    """True iff lattice point p lies on the polygon boundary."""
    px2, py2 = 2 * p[0], 2 * p[1]
    for (x1, y1), (x2, y2) in _segments(corners2):
        if y1 == y2:
            if py2 == y1 and min(x1, x2) <= px2 <= max(x1, x2):
                return True
        else:
            if abs(px2 - x1) == abs(py2 - y1) and \
                    (px2 - x1) * (x2 - x1) >= 0 and \
                    (py2 - y1) * (y2 - y1) >= 0 and \
                    abs(px2 - x1) <= abs(x2 - x1) and \
                    (x2 - x1) * (py2 - y1) == (y2 - y1) * (px2 - x1):
                return True
    return False


def inside_strict(corners2, p):
    """Even-odd parity test for a lattice point not on the boundary."""
    px2, py2 = 2 * p[0], 2 * p[1]
    crossings = 0
    for (x1, y1), (x2, y2) in _segments(corners2):
        if y1 == y2:
            continue
        if min(y1, y2) <= py2 < max(y1, y2):
            cx = x1 + (py2 - y1) * (x2 - x1) // (y2 - y1)
            if cx > px2:
                crossings += 1
    return crossings % 2 == 1


def region_points(corners2):
    """Lattice points inside or on the closed polyline."""
    xs = [c[0] for c in corners2]
    ys = [c[1] for c in corners2]
    for x in range(min(xs) // 2 - 1, max(xs) // 2 + 2):
        for y in range(min(ys) // 2 - 1, max(ys) // 2 + 2):
            p = (x, y)
            if on_boundary(corners2, p) or inside_strict(corners2, p):
                yield p


def graph_on_points(lat, pts):
    keep = set(pts)
    edges = []
    for x, y in keep:
        for q in ((x + 1, y), (x, y + 1)):
            if q in keep and lat.edge_exists((x, y), q):
                edges.append(((x, y), q))
    return Graph(keep, edges)


def induced_subgraph(lat, corners2):
    """Lattice graph induced by the points inside or on the polyline."""
    pts = [p for p in region_points(corners2) if lat.has_vertex(p)]
    return graph_on_points(lat, pts)


# -- side strips -----------------------------------------------------------------


def points_on_segment(p1_2, p2_2):
    """Lattice points lying on a segment given in doubled coordinates."""
    (x1, y1), (x2, y2) = p1_2, p2_2
    if p1_2 == p2_2:
        return []
    steps = max(abs(x2 - x1), abs(y2 - y1))
    dx = (x2 - x1) // steps
    dy = (y2 - y1) // steps
    out = []
    for t in range(steps + 1):
        X, Y = x1 + t * dx, y1 + t * dy
        if X % 2 == 0 and Y % 2 == 0:
            out.append((X // 2, Y // 2))
    return out


def strip_segment(g, p1_2, p2_2):
    """Drop every vertex of g lying on the closed doubled segment."""
    return g.without(points_on_segment(p1_2, p2_2))


# -- zigzag trims ----------------------------------------------------------------

ZIGZAG_PERIOD = 4
# The zigzag pattern removes one vertex per period from the trimmed row,
# always in a column adjacent to the row's missing-edge pair: delta=2 is
# the column just east of the pair, delta=3 the column just west of the
# next one.  The sweep direction of the cut maps onto these two phases.
SWEEP_DELTA = {"right_to_left": 2, "left_to_right": 3}


def slit_base(row_y):
    """Column residue (mod 4) of the missing vertical edge pair on a row."""
    return (row_y + 1) % 4 if row_y % 2 == 0 else row_y % 4


def zigzag_trim_row(row_y, x_lo, x_hi, delta):
    """Vertices removed by the zigzag cut of one lattice row.

    One vertex per period of four columns, at the slit-locked phase
    delta, over the side span [x_lo, x_hi].  Fixed columns make the trim
    idempotent.
    """
    r = (slit_base(row_y) + delta) % 4
    return {(x, row_y) for x in range(x_lo, x_hi + 1) if x % 4 == r}


def trim_zigzag_side(g, corners2, side_idx, sweep=None, delta=None):
    """Apply the zigzag trim along one horizontal contour side of g."""
    p1, p2 = corners2[side_idx], corners2[side_idx + 1]
    if p1 == p2:
        return g
    if p1[1] != p2[1]:
        raise NotHorizontalSide(f"{p1}..{p2} is not horizontal")
    if delta is None:
        delta = SWEEP_DELTA[sweep]
    y2 = p1[1]
    below = (((p1[0] + p2[0]) // 2) // 2, (y2 - 1) // 2)
    interior_is_below = on_boundary(corners2, below) or \
        inside_strict(corners2, below)
    row_y = (y2 - 1) // 2 if interior_is_below else (y2 + 1) // 2
    x_lo = (min(p1[0], p2[0]) + 1) // 2
    x_hi = (max(p1[0], p2[0]) - 1) // 2
    return g.without(zigzag_trim_row(row_y, x_lo, x_hi, delta))


def corner_cut(g, level, keep, delta=None, sweep=None, anchor_offset=None):
    """Zigzag corner cut at a horizontal level.

    keep="below" removes every vertex above `level` and then the zigzag
    pattern of the exposed row y=level itself; keep="above" mirrors this.
    The pattern is slit-locked via `delta`, or anchored at the sweep end
    of the exposed row when `anchor_offset` is given instead.
    """
    if keep == "below":
        beyond = {v for v in g.vertices if v[1] > level}
    elif keep == "above":
        beyond = {v for v in g.vertices if v[1] < level}
    else:
        raise ValueError(f"keep must be 'below' or 'above', got {keep!r}")
    trimmed = g.without(beyond)
    row = sorted(x for (x, y) in trimmed.vertices if y == level)
    if not row:
        return trimmed
    if anchor_offset is not None:
        drop = set()
        if sweep == "right_to_left":
            x = row[-1] - anchor_offset
            while x >= row[0]:
                drop.add((x, level))
                x -= ZIGZAG_PERIOD
        else:
            x = row[0] + anchor_offset
            while x <= row[-1]:
                drop.add((x, level))
                x += ZIGZAG_PERIOD
    else:
        if delta is None:
            delta = SWEEP_DELTA[sweep]
        drop = zigzag_trim_row(level, row[0], row[-1], delta)
    return trimmed.without(drop)

"""Builders for every named graph family on the cross lattice.

Pipeline, fixed: trace contour -> induce subgraph -> strip diagonal sides
-> zigzag-trim horizontal sides.  Which sides are stripped per family
(with the tall/flat case split), the trim sweeps and offsets, and the
rotated-rectangle anchor classes are frozen calibration results; the
acceptance suite is the authority that they are right.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import (
    FULL_GRID, GRID_B, ContourSpec, trace_contour, induced_subgraph,
    graph_on_points, points_on_segment, trim_zigzag_side, corner_cut,
)
from .matchcount import edge_key


class InvalidParams(Exception):
    pass


class NotGridB(Exception):
    pass


SIDE_NAMES = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class FamilyParams:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    perimeter: int
    case_tall: bool


def derive_params(a, b, c):
    """Validate (a, b, c) and attach the derived side lengths.

    d = 2b - a - 2c and e = 3b - 2a - 2c must be non-negative and b >= 2;
    f = |2a - 2b + c| closes the contour.
    """
    if a < 0 or b < 0 or c < 0:
        raise InvalidParams(f"negative parameter in {(a, b, c)}")
    if b < 2:
        raise InvalidParams(f"b={b} < 2")
    d = 2 * b - a - 2 * c
    e = 3 * b - 2 * a - 2 * c
    f = abs(2 * a - 2 * b + c)
    if d < 0:
        raise InvalidParams(f"d={d} < 0 for {(a, b, c)}")
    if e < 0:
        raise InvalidParams(f"e={e} < 0 for {(a, b, c)}")
    tall = a > c + d
    return FamilyParams(a, b, c, d, e, f, a + b + c + d + e + f, tall)


def family_contour(i, a, b, c, start=(0, 0)):
    """Six-sided contour of family i in {1,2,3}, anchored at a cross base."""
    p = derive_params(a, b, c)
    if i == 1:
        closing = "W" if p.case_tall else "E"
        sides = (("SE", 2 * a), ("NE", 2 * b), ("W", 4 * c),
                 ("NW", 2 * p.d), ("SW", 2 * p.e), (closing, 4 * p.f))
    elif i == 2:
        closing = "NW" if p.case_tall else "SE"
        sides = (("SW", 2 * a), ("E", 4 * b), ("NW", 2 * c),
                 ("NE", 2 * p.d), ("W", 4 * p.e), (closing, 2 * p.f))
    elif i == 3:
        closing = "SW" if p.case_tall else "NE"
        sides = (("E", 4 * a), ("NW", 2 * b), ("SW", 2 * c),
                 ("W", 4 * p.d), ("SE", 2 * p.e), (closing, 2 * p.f))
    else:
        raise InvalidParams(f"family index {i} not in 1..3")
    return ContourSpec(family=f"C{i}", start=start, sides=sides)


def strip_side_vertices(g, corners2, which):
    """Remove the vertices of g lying on one contour side."""
    idx = SIDE_NAMES.index(which)
    p1, p2 = corners2[idx], corners2[idx + 1]
    if p1 == p2:
        return g
    return g.without(points_on_segment(p1, p2))


def apply_zigzag_trim(g, corners2, which, sweep=None, delta=None):
    """Zigzag-trim one horizontal contour side of g."""
    idx = SIDE_NAMES.index(which)
    return trim_zigzag_side(g, corners2, idx, sweep=sweep, delta=delta)


# Sides stripped per family: (always, when tall, when flat);
# tall means a > c + d.
_STRIP_RULES = {
    ("A", 1): (("a", "b", "d", "e"), None, None),
    ("F", 1): ((), None, None),
    ("A", 2): (("c",), None, "f"),
    ("F", 2): (("a", "d"), "f", None),
    ("A", 3): ((), "f", None),
    ("F", 3): (("b", "c", "e"), None, "f"),
}
# Horizontal-side trims per family: ((side, slit phase), ...).  Each
# family trims its two horizontal sides at the two opposite slit-adjacent
# phases; which side takes which phase is a calibration result.
_TRIM_RULES = {
    ("A", 1): (("c", 2), ("f", 3)),
    ("F", 1): (("c", 3), ("f", 2)),
    ("A", 2): (("b", 2), ("e", 3)),
    ("F", 2): (("b", 3), ("e", 2)),
    ("A", 3): (("a", 3), ("d", 2)),
    ("F", 3): (("a", 2), ("d", 3)),
}


def _build_family(kind, i, a, b, c, lat=GRID_B):
    p = derive_params(a, b, c)
    corners2 = trace_contour(family_contour(i, a, b, c))
    g = induced_subgraph(lat, corners2)
    always, if_tall, if_flat = _STRIP_RULES[(kind, i)]
    sides = list(always)
    if if_tall and p.case_tall:
        sides.append(if_tall)
    if if_flat and not p.case_tall:
        sides.append(if_flat)
    for s in sides:
        g = strip_side_vertices(g, corners2, s)
    for which, delta in _TRIM_RULES[(kind, i)]:
        g = apply_zigzag_trim(g, corners2, which, delta=delta)
    return g


def build_A(i, a, b, c, lat=GRID_B):
    """The i-th family graph with all bounding diagonals stripped bare."""
    return _build_family("A", i, a, b, c, lat=lat)


def build_F(i, a, b, c, lat=GRID_B):
    """The i-th family graph that keeps its diagonal boundary rows."""
    return _build_family("F", i, a, b, c, lat=lat)


# -- rotated rectangles ------------------------------------------------------------

# East-corner residues (u_max, v_max) in rotated coordinates u = x+y,
# v = x-y.  "east": the rectangle's east tip edge is the east arm tip of a
# cross; "west": its west arm tip.  Frozen by calibration.
ALIGN_UV = {"east": (4, 3), "west": (1, 0)}


def _corner_uv(lat, alignment):
    if lat.kind != "cross":
        return (0, 1)
    if alignment not in ALIGN_UV:
        raise InvalidParams(f"unknown alignment {alignment!r}")
    return ALIGN_UV[alignment]


def aztec_rectangle_points(m, n, corner_uv):
    """Vertices of the rotated rectangle with SE side m and NE side n."""
    u_max, v_max = corner_uv
    if (u_max + v_max) % 2 == 0:
        raise InvalidParams("rectangle corner must be a unit-square center")
    out = []
    for u in range(u_max - 2 * n, u_max + 1):
        for v in range(v_max - 2 * m, v_max + 1):
            if (u + v) % 2 == 0:
                out.append(((u + v) // 2, (u - v) // 2))
    return out


def build_aztec_rectangle(lat, m, n, alignment="east", corner_uv=None):
    if m < 1 or n < 1:
        raise InvalidParams("m, n must be >= 1")
    if corner_uv is None:
        corner_uv = _corner_uv(lat, alignment)
    pts = [p for p in aztec_rectangle_points(m, n, corner_uv)
           if lat.has_vertex(p)]
    return graph_on_points(lat, pts)


def build_augmented_aztec(lat, m, n, alignment="east", corner_uv=None):
    """Rectangle stretched one unit west: one extra square per row."""
    if m < 1 or n < 1:
        raise InvalidParams("m, n must be >= 1")
    if corner_uv is None:
        corner_uv = _corner_uv(lat, alignment)
    base = aztec_rectangle_points(m, n, corner_uv)
    pts = set(base)
    pts.update((x - 1, y) for x, y in base)
    pts = [p for p in sorted(pts) if lat.has_vertex(p)]
    return graph_on_points(lat, pts)


def build_TR(a, b):
    """Trimmed augmented rectangle; counted by powers of 10 and 11."""
    if a < 1 or b < 2 * a:
        raise InvalidParams(f"need a >= 1 and b >= 2a, got {(a, b)}")
    m = 2 * b + 2 * a - 2
    n = 2 * b + 4 * a - 2
    u_max, v_max = ALIGN_UV["east"]
    g = build_augmented_aztec(GRID_B, m, n, corner_uv=(u_max, v_max))
    east_y2 = u_max - v_max
    level_n = (east_y2 - 1) // 2 + (2 * a - 1) + 1
    level_s = (east_y2 + 1) // 2 - (4 * a - 1) - 1
    g = corner_cut(g, level_n, "below", delta=3)
    g = corner_cut(g, level_s, "above", delta=3)
    return g


@dataclass(frozen=True)
class TrimRectParams:
    m: int
    n: int
    h1: int
    h2: int
    variant: str  # "TA" | "TB"

    def __post_init__(self):
        if min(self.m, self.n, self.h1, self.h2) < 0 or self.m > self.n:
            raise InvalidParams(f"bad trim-rectangle parameters {self}")
        if (self.h1 + 1) // 2 + (self.h2 + 1) // 2 != 2 * (self.n - self.m):
            raise InvalidParams(
                f"floor-sum constraint fails for "
                f"{(self.m, self.n, self.h1, self.h2)}")
        if self.variant not in ("TA", "TB"):
            raise InvalidParams(f"variant must be TA or TB, not {self.variant}")


def _build_trim_rect(rect_m, rect_n, h1, h2, corner_uv):
    g = build_aztec_rectangle(GRID_B, rect_m, rect_n, corner_uv=corner_uv)
    u_max, v_max = corner_uv
    north_y2 = u_max - (v_max - 2 * rect_m)
    south_y2 = (u_max - 2 * rect_n) - v_max
    level_top = (north_y2 - 1) // 2 - h1
    level_bot = (south_y2 + 1) // 2 + h2
    # these two cuts anchor at the ragged row ends, not at slit phase
    g = corner_cut(g, level_top, "below", sweep="right_to_left",
                   anchor_offset=3)
    g = corner_cut(g, level_bot, "above", sweep="left_to_right",
                   anchor_offset=3)
    return g


def build_TA(p):
    if p.variant != "TA":
        raise InvalidParams("params are not TA params")
    return _build_trim_rect(2 * p.m, 2 * p.n, p.h1, p.h2, ALIGN_UV["east"])


def build_TB(p):
    if p.variant != "TB":
        raise InvalidParams("params are not TB params")
    return _build_trim_rect(2 * p.m - 1, 2 * p.n - 1, p.h1, p.h2,
                            ALIGN_UV["west"])


# -- reflections --------------------------------------------------------------------


def reflect(g, axis):
    """Mirror a graph; the cross lattice maps onto itself up to translation."""
    if axis == "vertical":
        fn = lambda v: (-v[0], v[1])
    elif axis == "horizontal":
        fn = lambda v: (v[0], -v[1])
    else:
        raise ValueError(f"unknown axis {axis!r}")
    return g.mapped(fn)


def translate(g, dx, dy):
    return g.mapped(lambda v: (v[0] + dx, v[1] + dy))


def lattice_translations(g1, g2):
    """All translations t with V(g1)+t = V(g2) and edges preserved."""
    if len(g1) != len(g2) or g1.n_edges() != g2.n_edges():
        return []
    if len(g1) == 0:
        return [(0, 0)]
    v1 = min(g1.vertices)
    s2 = set(g2.vertices)
    out = []
    for w in g2.vertices:
        dx, dy = w[0] - v1[0], w[1] - v1[1]
        if not all((v[0] + dx, v[1] + dy) in s2 for v in g1.vertices):
            continue
        if all(g2.has_edge((u[0] + dx, u[1] + dy), (v[0] + dx, v[1] + dy))
               for u, v in g1.edges()):
            out.append((dx, dy))
    return out


def isomorphic_by_translation(g1, g2):
    return bool(lattice_translations(g1, g2))


# -- cross weights ------------------------------------------------------------------

# Weight symbol per cross edge (everything else weighs 1): x on the open
# east arm, y on the central-square horizontals and the left vertical arm
# edges, z on the right vertical arm edges and the north/south tips.
# One representative of the eight equivalent calibrated transcriptions.
WEIGHT_TABLE = {
    ((1, 0), (2, 0)): "x", ((1, 1), (2, 1)): "x",
    ((0, 0), (1, 0)): "y", ((0, 1), (1, 1)): "y",
    ((0, 1), (0, 2)): "y", ((0, -1), (0, 0)): "y",
    ((1, 1), (1, 2)): "z", ((1, -1), (1, 0)): "z",
    ((0, 2), (1, 2)): "z", ((0, -1), (1, -1)): "z",
}


@dataclass(frozen=True)
class WeightPoint:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for t in (self.x, self.y, self.z):
            if t <= 0:
                raise InvalidParams("weights must be positive")

    def as_tuple(self):
        return (self.x, self.y, self.z)


def weight_point(x, y, z):
    return WeightPoint(Fraction(x), Fraction(y), Fraction(z))


def assign_cross_weights(g, w, table=None):
    """Attach the periodic cross weight pattern to every edge of g."""
    table = table or WEIGHT_TABLE
    symbols = {"x": Fraction(w.x), "y": Fraction(w.y), "z": Fraction(w.z)}
    weights = {}
    for u, v in g.edges():
        if not GRID_B.edge_exists(u, v):
            raise NotGridB(f"edge {u}-{v} is not a cross-lattice edge")
        sym = table.get(GRID_B.edge_offset(u, v))
        if sym is not None:
            weights[edge_key(u, v)] = symbols[sym]
    return g.with_weights(weights)


# -- family spec strings ---------------------------------------------------------------


def parse_spec(text):
    """Build the graph named by a CLI string like A1:9,8,2 or AR:2,2@full."""
    text = text.strip()
    if ":" not in text:
        raise InvalidParams(f"malformed spec {text!r}")
    head, rest = text.split(":", 1)
    lat = None
    if "@" in rest:
        rest, latname = rest.split("@", 1)
        if latname.lower() == "full":
            lat = FULL_GRID
        elif latname.lower() in ("b", "cross"):
            lat = GRID_B
        else:
            raise InvalidParams(f"unknown lattice {latname!r}")
    try:
        nums = [int(t) for t in rest.split(",")]
    except ValueError as exc:
        raise InvalidParams(f"bad numbers in {text!r}") from exc
    head = head.upper()
    if head in ("A1", "A2", "A3", "F1", "F2", "F3"):
        if len(nums) != 3:
            raise InvalidParams(f"{head} needs a,b,c")
        fn = build_A if head[0] == "A" else build_F
        return fn(int(head[1]), *nums, lat=lat or GRID_B)
    if head == "TR":
        if len(nums) != 2:
            raise InvalidParams("TR needs a,b")
        return build_TR(*nums)
    if head in ("TA", "TB"):
        if len(nums) != 4:
            raise InvalidParams(f"{head} needs m,n,h1,h2")
        p = TrimRectParams(*nums, variant=head)
        return build_TA(p) if head == "TA" else build_TB(p)
    if head == "AR":
        if len(nums) != 2:
            raise InvalidParams("AR needs m,n")
        return build_aztec_rectangle(lat or FULL_GRID, *nums)
    if head == "AAR":
        if len(nums) != 2:
            raise InvalidParams("AAR needs m,n")
        return build_augmented_aztec(lat or FULL_GRID, *nums)
    raise InvalidParams(f"unknown family {head!r}")

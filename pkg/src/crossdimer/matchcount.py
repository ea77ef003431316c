"""Exact perfect-matching counts for plane lattice graphs.

Two independent counting routes are provided: a branching brute-force
counter (the oracle, for small graphs) and a Pfaffian-orientation counter
whose determinant is computed exactly by CRT over word-sized primes.  All
arithmetic is exact; no floats touch any counting path.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from math import isqrt

import numpy as np

BRUTE_CAP = 44
FKT_CAP = 700


class TooLarge(Exception):
    pass


class BadVertexSelection(Exception):
    pass


class ConditionsViolated(Exception):
    pass


class NonPlanarEmbedding(Exception):
    """Internal assertion: lattice graphs must embed without crossings."""


def edge_key(u, v):
    return (u, v) if u <= v else (v, u)


class Graph:
    """Undirected graph on integer lattice points.

    Vertices are (x, y) tuples; the bipartition is by (x + y) parity.
    Edge weights default to 1 and are stored sparsely as exact Fractions
    (or ints) only where they differ from 1.
    """

    __slots__ = ("vertices", "adj", "weights")

    def __init__(self, vertices, edges, weights=None):
        self.vertices = tuple(sorted(set(vertices)))
        vs = set(self.vertices)
        adj = {v: set() for v in self.vertices}
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop")
            if u not in vs or v not in vs:
                raise ValueError("edge endpoint not a vertex")
            if (u[0] + u[1] + v[0] + v[1]) % 2:
                adj[u].add(v)
                adj[v].add(u)
            else:
                raise ValueError(f"edge {u}-{v} joins same parity class")
        self.adj = adj
        self.weights = {}
        if weights:
            for (u, v), w in weights.items():
                if w != 1:
                    self.weights[edge_key(u, v)] = w

    # -- basic accessors ------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        return [(u, v) for u in self.vertices for v in self.adj[u] if u < v]

    def n_edges(self):
        return sum(len(s) for s in self.adj.values()) // 2

    def weight(self, u, v):
        return self.weights.get(edge_key(u, v), 1)

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        return v in self.adj.get(u, ())

    def classes(self):
        """Vertices by (x+y) parity: (even list, odd list), both sorted."""
        ev = [v for v in self.vertices if (v[0] + v[1]) % 2 == 0]
        od = [v for v in self.vertices if (v[0] + v[1]) % 2 == 1]
        return ev, od

    def is_balanced(self):
        ev, od = self.classes()
        return len(ev) == len(od)

    # -- derived graphs --------------------------------------------------

    def induced(self, keep):
        keep = set(keep)
        edges = [(u, v) for u, v in self.edges() if u in keep and v in keep]
        w = {e: w for e, w in self.weights.items()
             if e[0] in keep and e[1] in keep}
        return Graph([v for v in self.vertices if v in keep], edges, w)

    def without(self, drop):
        drop = set(drop)
        return self.induced(v for v in self.vertices if v not in drop)

    def with_weights(self, weights):
        return Graph(self.vertices, self.edges(), weights)

    def mapped(self, fn):
        """Relabel vertices through fn (must stay parity-preserving)."""
        edges = [(fn(u), fn(v)) for u, v in self.edges()]
        w = {edge_key(fn(u), fn(v)): wt for (u, v), wt in self.weights.items()}
        return Graph([fn(v) for v in self.vertices], edges, w)

    def components(self):
        seen = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            comps.append(self.induced(comp))
        return comps

    # -- canonical serialization ------------------------------------------

    def to_json(self):
        """Canonical JSON: sorted vertices, sorted index pairs (i < j)."""
        idx = {v: i for i, v in enumerate(self.vertices)}
        ed = sorted((idx[u], idx[v]) for u, v in self.edges())
        doc = {"vertices": [list(v) for v in self.vertices],
               "edges": [list(e) for e in ed]}
        if self.weights:
            doc["weights"] = sorted(
                [idx[u], idx[v], str(w)] for (u, v), w in self.weights.items())
        return json.dumps(doc, separators=(",", ":"))

    def graph_hash(self):
        return hashlib.sha256(self.to_json().encode()).hexdigest()


# -- forced-edge reduction -------------------------------------------------


def reduce_forced(g):
    """Repeatedly match degree-1 vertices away.

    Returns (reduced graph, multiplier): M(g) = multiplier * M(reduced).
    An isolated vertex short-circuits to (empty graph, 0).
    """
    adj = {v: set(s) for v, s in g.adj.items()}
    mult = 1
    queue = [v for v, s in adj.items() if len(s) <= 1]
    dead = set()
    while queue:
        v = queue.pop()
        if v in dead or v not in adj:
            continue
        nbrs = adj[v]
        if not nbrs:
            return Graph([], []), 0
        if len(nbrs) > 1:
            continue
        (u,) = nbrs
        mult *= g.weight(u, v)
        for w in adj[u]:
            if w != v:
                adj[w].discard(u)
                if len(adj[w]) <= 1:
                    queue.append(w)
        dead.add(v)
        dead.add(u)
        del adj[v]
        del adj[u]
    keep = list(adj)
    reduced = g.induced(keep)
    if any(reduced.degree(v) == 0 for v in reduced.vertices):
        return Graph([], []), 0
    return reduced, mult


# -- brute-force oracle ------------------------------------------------------


def count_brute(g, cap=BRUTE_CAP):
    """Exact weighted matching count by branching on a min-degree vertex.

    Deterministic: ties in degree are broken by lexicographic point order.
    """
    if len(g) > cap:
        raise TooLarge(f"{len(g)} vertices exceeds brute cap {cap}")
    adj = {v: set(s) for v, s in g.adj.items()}
    return _brute(adj, g.weights)


def _brute(adj, weights):
    if not adj:
        return 1
    total = 1
    # forced / isolated propagation
    while True:
        pivot = min(adj, key=lambda v: (len(adj[v]), v))
        d = len(adj[pivot])
        if d == 0:
            return 0
        if d > 1:
            break
        (u,) = adj[pivot]
        total *= weights.get(edge_key(pivot, u), 1)
        for w in adj[u]:
            if w != pivot:
                adj[w].discard(u)
        del adj[pivot]
        del adj[u]
        if not adj:
            return total
    if len(adj) % 2:
        return 0
    acc = 0
    for u in sorted(adj[pivot]):
        sub = {v: {w for w in s if w != pivot and w != u}
               for v, s in adj.items() if v != pivot and v != u}
        acc += weights.get(edge_key(pivot, u), 1) * _brute(sub, weights)
    return total * acc


# -- planar embedding: faces ------------------------------------------------


def _sorted_rotations(g):
    """Neighbors of each vertex in counterclockwise angular order."""
    from math import atan2

    rot = {}
    for v in g.vertices:
        nbrs = sorted(g.adj[v], key=lambda u: atan2(u[1] - v[1], u[0] - v[0]))
        rot[v] = nbrs
    return rot


def planar_faces(g):
    """Face cycles of the straight-line embedding.

    Each face is a list of vertices, one entry per boundary dart; bridges
    appear twice.  Faces traced with this rotation rule keep the interior
    on the left, so bounded faces come out counterclockwise (positive
    signed area) and the outer face clockwise.
    """
    rot = _sorted_rotations(g)
    pos = {v: {u: i for i, u in enumerate(rot[v])} for v in g.vertices}
    unused = {(u, v) for u in g.vertices for v in g.adj[u]}
    faces = []
    while unused:
        start = min(unused)
        cycle = []
        dart = start
        while True:
            cycle.append(dart[0])
            unused.discard(dart)
            u, v = dart
            nbrs = rot[v]
            i = pos[v][u]
            dart = (v, nbrs[(i - 1) % len(nbrs)])
            if dart == start:
                break
        faces.append(cycle)
    return faces


def face_area2(cycle):
    """Twice the signed (shoelace) area of a face cycle."""
    s = 0
    n = len(cycle)
    for i in range(n):
        x1, y1 = cycle[i]
        x2, y2 = cycle[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s


# -- Pfaffian orientation ----------------------------------------------------


def pfaffian_orientation(g):
    """Orient edges so every bounded face is clockwise-odd.

    Works per connected component via a GF(2) solve over edge flips; robust
    to bridges.  Returns {edge_key: (tail, head)}.
    """
    orient = {}
    for comp in g.components() if len(g) else []:
        orient.update(_orient_component(comp))
    return orient


def _orient_component(g):
    edges = g.edges()
    eidx = {e: i for i, e in enumerate(edges)}
    faces = planar_faces(g)
    if len(g.vertices) >= 1:
        # Euler check doubles as a non-crossing assertion for lattice input
        V, E, F = len(g.vertices), len(edges), len(faces)
        if V - E + F != 2:
            raise NonPlanarEmbedding(f"V-E+F={V - E + F} != 2")
    rows, rhs = [], []
    for cycle in faces:
        if face_area2(cycle) <= 0:
            continue  # outer face is unconstrained
        mask = 0
        passes = 0
        agree = 0
        n = len(cycle)
        for i in range(n):
            u, v = cycle[i], cycle[(i + 1) % n]
            mask ^= 1 << eidx[edge_key(u, v)]
            passes += 1
            if (u, v) == edge_key(u, v):
                agree += 1
        # want: #edges oriented against the CCW traversal to be odd
        rows.append(mask)
        rhs.append((passes - 1 - agree) % 2)
    flips = _solve_gf2(rows, rhs, len(edges))
    out = {}
    for e, i in eidx.items():
        out[e] = e if not (flips >> i) & 1 else (e[1], e[0])
    return out


def _solve_gf2(rows, rhs, nvars):
    """Solve a GF(2) system given as bitmask rows; any solution returned."""
    pivots = {}
    sol = 0
    for mask, b in zip(rows, rhs):
        for p, (pm, pb) in pivots.items():
            if (mask >> p) & 1:
                mask ^= pm
                b ^= pb
        if mask == 0:
            if b:
                raise NonPlanarEmbedding("inconsistent face parity system")
            continue
        p = mask.bit_length() - 1
        pivots[p] = (mask, b)
    for p in sorted(pivots):
        mask, b = pivots[p]
        val = b
        low = mask & ((1 << p) - 1)
        while low:
            q = low & -low
            if sol & q:
                val ^= 1
            low ^= q
        if val:
            sol |= 1 << p
    return sol


# -- exact determinant via CRT ----------------------------------------------

_PRIME_POOL = []


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes(k):
    n = _PRIME_POOL[-1] - 2 if _PRIME_POOL else (1 << 30) - 1
    while len(_PRIME_POOL) < k:
        if _is_probable_prime(n):
            _PRIME_POOL.append(n)
        n -= 2
    return _PRIME_POOL[:k]


def _det_mod(mat, p):
    """Determinant of an int64 numpy matrix mod p (p < 2^31)."""
    a = np.mod(mat, p).astype(np.int64)
    n = a.shape[0]
    det = 1
    for k in range(n):
        col = a[k:, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return 0
        i = k + int(nz[0])
        if i != k:
            a[[k, i]] = a[[i, k]]
            det = -det
        pivot = int(a[k, k])
        det = det * pivot % p
        inv = pow(pivot, p - 2, p)
        rows = a[k + 1:, k]
        nzr = np.nonzero(rows)[0]
        if nzr.size:
            factors = (rows[nzr] * inv) % p
            a[k + 1 + nzr, k:] = (
                a[k + 1 + nzr, k:] - factors[:, None] * a[k, k:]) % p
    return det % p


def det_exact(mat):
    """Exact determinant of a Python-int matrix by CRT reconstruction.

    The number of primes is bounded by the Hadamard row bound.
    """
    n = len(mat)
    if n == 0:
        return 1
    b2 = 1
    for row in mat:
        s = sum(x * x for x in row)
        if s == 0:
            return 0
        b2 *= s
    bound = isqrt(b2) + 1
    need = 2 * bound + 1
    primes, prod = [], 1
    k = 0
    while prod < need:
        k += 16
        primes = _primes(k)
        prod = 1
        for p in primes:
            prod *= p
    maxabs = max(abs(x) for row in mat for x in row)
    fast = None
    if maxabs < (1 << 31):
        fast = np.array(mat, dtype=np.int64)
    acc, pr = 0, 1
    for p in primes:
        if fast is not None:
            small = np.mod(fast, p)
        else:
            small = np.array([[int(x) % p for x in row] for row in mat],
                             dtype=np.int64)
        r = _det_mod(small, p)
        # incremental CRT
        t = (r - acc) % p
        t = t * pow(pr % p, p - 2, p) % p
        acc += pr * t
        pr *= p
    if acc > pr // 2:
        acc -= pr
    assert abs(acc) <= bound
    return acc


# -- FKT counting -------------------------------------------------------------


def count_fkt(g, cap=FKT_CAP):
    """Exact matching count via Pfaffian orientation and exact determinants.

    Runs per connected component after forced-edge reduction; exact for
    arbitrary Fraction edge weights.
    """
    reduced, mult = reduce_forced(g)
    if mult == 0:
        return 0
    total = mult
    for comp in reduced.components():
        if len(comp) == 0:
            continue
        if len(comp) % 2:
            return 0
        if len(comp) > cap:
            raise TooLarge(f"component of {len(comp)} vertices exceeds {cap}")
        total *= _fkt_component(comp)
        if total == 0:
            return 0
    if isinstance(total, Fraction) and total.denominator == 1:
        total = int(total)
    return total


def _fkt_component(g):
    ev, od = g.classes()
    if len(ev) != len(od):
        return 0
    orient = _orient_component(g)
    scale = 1
    for w in g.weights.values():
        if isinstance(w, Fraction) and w.denominator != 1:
            scale = scale * w.denominator // _gcd(scale, w.denominator)
    rows = {v: i for i, v in enumerate(ev)}
    cols = {v: i for i, v in enumerate(od)}
    n = len(ev)
    mat = [[0] * n for _ in range(n)]
    for u, v in g.edges():
        w = g.weight(u, v) * scale
        assert w == int(w)
        w = int(w)
        tail, _ = orient[edge_key(u, v)]
        sgn = 1 if (tail[0] + tail[1]) % 2 == 0 else -1
        a, b = (u, v) if (u[0] + u[1]) % 2 == 0 else (v, u)
        mat[rows[a]][cols[b]] = sgn * w
    det = abs(det_exact(mat))
    if scale == 1:
        return det
    return Fraction(det, scale ** n)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def count_matchings(g, method="auto", brute_cap=BRUTE_CAP, fkt_cap=FKT_CAP):
    """Count with the requested method; `auto` cross-checks when both run."""
    if method == "brute":
        return count_brute(g, cap=brute_cap)
    if method == "fkt":
        return count_fkt(g, cap=fkt_cap)
    if method == "auto":
        if len(g) <= brute_cap:
            nb = count_brute(g, cap=brute_cap)
            nf = count_fkt(g, cap=fkt_cap)
            if nb != nf:
                raise AssertionError(
                    f"oracle mismatch: brute={nb} fkt={nf} for {g.graph_hash()}")
            return nb
        return count_fkt(g, cap=fkt_cap)
    raise ValueError(f"unknown method {method!r}")


# -- identity checkers ---------------------------------------------------------


def kuo_check(g, u, v, w, t, method="auto"):
    """Verify the condensation identity for four face-cyclic vertices.

    u, w must share one parity class and v, t the other; the four must
    appear in cyclic order (either rotation sense) on a single face.
    Returns a dict with both sides of the identity.
    """
    for p in (u, v, w, t):
        if p not in g.adj:
            raise BadVertexSelection(f"{p} not a vertex")
    if not g.is_balanced():
        raise BadVertexSelection("graph is not balanced")
    pu, pv, pw, pt = ((p[0] + p[1]) % 2 for p in (u, v, w, t))
    if not (pu == pw and pv == pt and pu != pv):
        raise BadVertexSelection("u,w and v,t must oppose by parity class")
    if not _on_common_face_in_order(g, (u, v, w, t)):
        raise BadVertexSelection("vertices not in cyclic order on one face")
    m = lambda deleted: count_matchings(g.without(deleted), method=method)
    lhs = count_matchings(g, method=method) * m((u, v, w, t))
    rhs = m((u, v)) * m((w, t)) + m((t, u)) * m((v, w))
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


def _on_common_face_in_order(g, quad):
    for cycle in planar_faces(g):
        index = {}
        for i, p in enumerate(cycle):
            index.setdefault(p, []).append(i)
        if any(p not in index for p in quad):
            continue
        from itertools import product

        n = len(cycle)
        for picks in product(*(index[p] for p in quad)):
            a, b, c, d = picks
            fwd = ((b - a) % n, (c - a) % n, (d - a) % n)
            if 0 < fwd[0] < fwd[1] < fwd[2]:
                return True
            rev = ((d - a) % n, (c - a) % n, (b - a) % n)
            if 0 < rev[0] < rev[1] < rev[2]:
                return True
    return False


def split_check(g, h_vertices, method="auto"):
    """Check the two splitting conditions and the product identity.

    Separating: no edge joins V(H) in one fixed class to G - H.
    Balancing: H has equally many vertices of both classes.
    """
    h_set = set(h_vertices)
    if not h_set <= set(g.vertices):
        raise ConditionsViolated("H is not a vertex subset of G")
    rest = [v for v in g.vertices if v not in h_set]
    h_even = sum(1 for v in h_set if (v[0] + v[1]) % 2 == 0)
    h_odd = len(h_set) - h_even
    if h_even != h_odd:
        raise ConditionsViolated(
            f"balancing condition fails: {h_even} vs {h_odd}")
    crossing_parity = set()
    for x, y in g.edges():
        if (x in h_set) != (y in h_set):
            inner = x if x in h_set else y
            crossing_parity.add((inner[0] + inner[1]) % 2)
    if len(crossing_parity) > 1:
        raise ConditionsViolated(
            "separating condition fails: both classes of H meet G-H")
    h = g.induced(h_set)
    r = g.induced(rest)
    m_g = count_matchings(g, method=method)
    m_h = count_matchings(h, method=method)
    m_r = count_matchings(r, method=method)
    return {"M_g": m_g, "M_h": m_h, "M_rest": m_r,
            "equal": m_g == m_h * m_r}

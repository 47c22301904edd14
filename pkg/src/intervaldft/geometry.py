"""Convex polygons, Minkowski addition and zonogons in the plane.

A polygon is stored as a start vertex plus its counter-clockwise edge
vectors, sorted by polar angle in ``[0, 2*pi)``. The start vertex is the
lowest vertex (leftmost among ties), so the first edge leaves it heading
right or up. In this form the Minkowski sum of two polygons is a merge of
two sorted edge lists, and the start vertex of the sum is the sum of the
start vertices.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .complex_box import Arc, ComplexBox, Diagonal, minimal_arc
from .interval import Interval

Point = Tuple[float, float]

TOL_GEOM = 1e-9
# Edges whose polar angles differ by less than this are treated as parallel.
ANGLE_TOL = 1e-12

TWO_PI = 2.0 * math.pi

LO, HI, ANY = "lo", "hi", "any"


def edge_angle(dx: float, dy: float) -> float:
    """Polar angle of a nonzero edge vector, in ``[0, 2*pi)``."""
    a = math.atan2(dy + 0.0, dx + 0.0)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI - ANGLE_TOL:
        a = 0.0
    return a


def opposite_angle(a: float) -> float:
    b = a + math.pi if a < math.pi else a - math.pi
    if b >= TWO_PI - ANGLE_TOL:
        b = 0.0
    return b


def diagonal_edges(d: Diagonal):
    """Boundary of a segment seen as a two-sided polygon.

    Returns the start vertex, the generator's endpoint label there and the
    edge tuples ``(angle, dx, dy, ((source, sign),))`` in angular order.
    """
    (x0, y0), (x1, y1), n = d
    dx, dy = x1 - x0, y1 - y0
    if dx == 0.0 and dy == 0.0:
        return d.p0, ANY, []
    a = edge_angle(dx, dy)
    b = opposite_angle(a)
    forward = (a, dx, dy, ((n, 1),))
    backward = (b, -dx, -dy, ((n, -1),))
    if a < b:
        return d.p0, LO, [forward, backward]
    return d.p1, HI, [backward, forward]


def segment_polygon(d: Diagonal) -> "ConvexPolygon":
    """A diagonal as a (degenerate) polygon carrying its provenance."""
    start, label, edges = diagonal_edges(d)
    return ConvexPolygon._from_edge_list(start, edges, EdgeProvenance.from_edge_tuples(edges, [(d.source_index, label)]))


_LABELS = (LO, HI, ANY)
_CODES = {LO: 0, HI: 1, ANY: 2}
_LABEL_ARRAY = np.array(_LABELS, dtype=object)


@dataclass(frozen=True, eq=False)
class EdgeProvenance:
    """Which generator each boundary edge comes from.

    The entries of boundary edge ``k`` are ``sources[offsets[k]:offsets[k+1]]``
    with matching ``signs``: ``+1`` means walking the edge moves that
    generator from its lower to its upper endpoint, ``-1`` the reverse.
    Parallel generators share an edge. ``start[i]`` is the endpoint code
    (0 lo, 1 hi, 2 any) of generator ``generators[i]`` at the start vertex.
    """

    sources: np.ndarray
    signs: np.ndarray
    offsets: np.ndarray
    generators: np.ndarray
    start: np.ndarray

    @classmethod
    def from_edge_tuples(cls, edges, start_labels) -> Optional["EdgeProvenance"]:
        gens = [n for n, _ in start_labels]
        if len(set(gens)) != len(gens):
            # a generator counted twice has no single endpoint assignment
            return None
        pairs = [p for e in edges for p in e[3]]
        sources = np.array([n for n, _ in pairs], dtype=np.int64)
        signs = np.array([s for _, s in pairs], dtype=np.int8)
        offsets = np.zeros(len(edges) + 1, dtype=np.int64)
        np.cumsum([len(e[3]) for e in edges], out=offsets[1:])
        order = sorted(range(len(start_labels)), key=lambda i: start_labels[i][0])
        generators = np.array([start_labels[i][0] for i in order], dtype=np.int64)
        start = np.array([_CODES[start_labels[i][1]] for i in order], dtype=np.int8)
        return cls(sources, signs, offsets, generators, start)

    @property
    def n_edges(self) -> int:
        return len(self.offsets) - 1

    def edge(self, k: int) -> Tuple[Tuple[int, int], ...]:
        s, e = self.offsets[k], self.offsets[k + 1]
        return tuple(zip(self.sources[s:e].tolist(), self.signs[s:e].tolist()))

    def edge_tuples(self) -> List[Tuple[Tuple[int, int], ...]]:
        return [self.edge(k) for k in range(self.n_edges)]

    def start_labels(self) -> List[Tuple[int, str]]:
        return [(n, _LABELS[c]) for n, c in zip(self.generators.tolist(), self.start.tolist())]

    def configuration_at(self, vertex: int) -> Tuple[str, ...]:
        """Endpoint of every generator, in generator order, at boundary vertex
        ``vertex`` (counted from the start vertex)."""
        passed = self.sources[: self.offsets[vertex]]
        slot = np.searchsorted(self.generators, passed)
        flips = np.bincount(slot, minlength=len(self.generators)) % 2
        state = np.where((flips == 1) & (self.start < 2), 1 - self.start, self.start)
        return tuple(_LABEL_ARRAY[state].tolist())


class ConvexPolygon:
    """A convex polygon, possibly degenerate (a point or a segment).

    Build one with :meth:`from_vertices`, :meth:`point`, :func:`convex_hull`,
    :func:`minkowski_sum` or :func:`zonogon_from_diagonals`. Instances are
    treated as immutable.
    """

    def __init__(self, start: Point, angles, edges, provenance: Optional[EdgeProvenance] = None):
        self.start = (float(start[0]), float(start[1]))
        self.angles = np.asarray(angles, dtype=float).reshape(-1)
        self.edges = np.asarray(edges, dtype=float).reshape(-1, 2)
        self.angles.flags.writeable = False
        self.edges.flags.writeable = False
        if len(self.angles) != len(self.edges):
            raise ValueError("one angle per edge required")
        if len(self.edges) == 1:
            raise ValueError("a closed boundary cannot have a single edge")
        if provenance is not None and provenance.n_edges != len(self.edges):
            raise ValueError("provenance must list one entry per edge")
        self.provenance = provenance

    @classmethod
    def _from_edge_list(cls, start, edges, provenance=None) -> "ConvexPolygon":
        if edges:
            angles = [e[0] for e in edges]
            vecs = [(e[1], e[2]) for e in edges]
        else:
            angles, vecs = [], np.empty((0, 2))
        return cls(start, angles, vecs, provenance)

    @classmethod
    def point(cls, p: Point) -> "ConvexPolygon":
        return cls(p, [], np.empty((0, 2)))

    @classmethod
    def segment(cls, a: Point, b: Point) -> "ConvexPolygon":
        start, _, edges = diagonal_edges(Diagonal(tuple(map(float, a)), tuple(map(float, b))))
        return cls._from_edge_list(start, edges)

    @classmethod
    def from_vertices(cls, points, tol: float = TOL_GEOM) -> "ConvexPolygon":
        """Polygon from the vertices of a convex polygon in boundary order.

        Either orientation is accepted. Repeated and collinear vertices are
        dropped. Raises ValueError if the vertices do not bound a convex
        polygon.
        """
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        if len(pts) == 0:
            raise ValueError("need at least one vertex")
        unit = _power_of_two_scale(pts)
        if unit != 1.0:
            # work near unit scale so cross products neither underflow nor
            # overflow; scaling by a power of two is exact
            return cls.from_vertices(pts / unit, tol)._rescaled(unit)
        scale = _coordinate_scale(pts)
        eps = tol * scale
        keep = [pts[0]]
        for p in pts[1:]:
            if np.hypot(*(p - keep[-1])) > eps:
                keep.append(p)
        while len(keep) > 1 and np.hypot(*(keep[0] - keep[-1])) <= eps:
            keep.pop()
        pts = np.array(keep)
        if len(pts) == 1:
            return cls.point(tuple(pts[0]))
        area2 = _twice_area(pts)
        if abs(area2) <= eps * max(_extent(pts), eps):
            # all collinear: keep the two extreme points along the spread
            offsets = pts - pts[0]
            lengths = np.hypot(offsets[:, 0], offsets[:, 1])
            far = int(np.argmax(lengths))
            # unit direction, so tiny spreads do not underflow in the projection
            t = offsets @ (offsets[far] / lengths[far])
            return cls.segment(tuple(pts[np.argmin(t)]), tuple(pts[np.argmax(t)]))
        if area2 < 0:
            pts = pts[::-1]
        pts = _drop_collinear(pts, eps)
        vecs = np.roll(pts, -1, axis=0) - pts
        angles = np.array([edge_angle(dx, dy) for dx, dy in vecs])
        first = int(np.argmin(angles))
        pts = np.roll(pts, -first, axis=0)
        vecs = np.roll(vecs, -first, axis=0)
        angles = np.roll(angles, -first)
        if np.any(np.diff(angles) <= 0.0):
            raise ValueError("vertices do not describe a convex polygon")
        return cls(tuple(pts[0]), angles, vecs)

    def _rescaled(self, factor: float) -> "ConvexPolygon":
        start = (self.start[0] * factor, self.start[1] * factor)
        return ConvexPolygon(start, self.angles, self.edges * factor, self.provenance)

    @cached_property
    def vertices(self) -> np.ndarray:
        """Vertices in counter-clockwise order from the start vertex, shape (m, 2)."""
        start = np.array(self.start)
        if len(self.edges) == 0:
            out = start[None, :]
        else:
            out = np.empty((len(self.edges), 2))
            out[0] = start
            out[1:] = start + np.cumsum(self.edges[:-1], axis=0)
        out.flags.writeable = False
        return out

    @property
    def n_vertices(self) -> int:
        return max(len(self.edges), 1)

    @property
    def is_degenerate(self) -> bool:
        return len(self.edges) < 3

    @cached_property
    def scale(self) -> float:
        """Coordinate scale used to turn relative tolerances into absolute ones."""
        return _coordinate_scale(self.vertices)

    @cached_property
    def diameter(self) -> float:
        return _diameter(self.vertices)

    def area(self) -> float:
        if len(self.edges) < 3:
            return 0.0
        return 0.5 * _twice_area(self.vertices)

    def distance(self, points) -> np.ndarray:
        """Euclidean distance from each point to the closed polygon (0 inside)."""
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        bd = self.boundary_distance(pts)
        if len(self.edges) < 3:
            return bd
        return np.where(self._inside(pts), 0.0, bd)

    def boundary_distance(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        V = self.vertices
        if len(self.edges) == 0:
            return np.hypot(pts[:, 0] - V[0, 0], pts[:, 1] - V[0, 1])
        out = np.full(len(pts), np.inf)
        m = len(self.edges)
        # chunk over points to bound the (points x edges) temporaries
        step = max(1, 2_000_000 // m)
        A = V
        E = self.edges
        # hypot and unit directions avoid underflow for tiny edges
        elen = np.hypot(E[:, 0], E[:, 1])
        U = E / elen[:, None]
        for s in range(0, len(pts), step):
            P = pts[s:s + step, None, :] - A[None, :, :]
            with np.errstate(over="ignore"):  # huge t is clipped to 1 anyway
                t = np.einsum("pmj,mj->pm", P, U) / elen
            np.clip(t, 0.0, 1.0, out=t)
            D = P - t[..., None] * E[None, :, :]
            out[s:s + step] = np.hypot(D[..., 0], D[..., 1]).min(axis=1)
        return out

    def _inside(self, pts) -> np.ndarray:
        V, E = self.vertices, self.edges
        inside = np.empty(len(pts), dtype=bool)
        step = max(1, 2_000_000 // len(E))
        for s in range(0, len(pts), step):
            P = pts[s:s + step]
            cross = (E[None, :, 0] * (P[:, None, 1] - V[None, :, 1])
                     - E[None, :, 1] * (P[:, None, 0] - V[None, :, 0]))
            inside[s:s + step] = (cross >= 0.0).all(axis=1)
        return inside

    def contains(self, points, tol: float = TOL_GEOM) -> np.ndarray:
        """Closed containment with slack ``tol`` relative to :attr:`scale`."""
        return self.distance(points) <= tol * self.scale

    def origin_location(self, tol: float = TOL_GEOM) -> str:
        """``"outside"``, ``"boundary"`` or ``"interior"`` for the origin."""
        origin = np.zeros((1, 2))
        if self.boundary_distance(origin)[0] <= tol * self.scale:
            return "boundary"
        if len(self.edges) >= 3 and self._inside(origin)[0]:
            return "interior"
        return "outside"

    def reflected(self) -> "ConvexPolygon":
        """Mirror image about the real axis (complex conjugate)."""
        return ConvexPolygon.from_vertices(self.vertices * np.array([1.0, -1.0]))

    def almost_equal(self, other: "ConvexPolygon", tol: float = TOL_GEOM) -> bool:
        scale = max(self.diameter, other.diameter, self.scale, other.scale, 1e-300)
        return hausdorff_distance(self, other) <= tol * scale

    def __repr__(self):
        pts = ", ".join(f"({x:.6g}, {y:.6g})" for x, y in self.vertices)
        return f"ConvexPolygon([{pts}])"


def _power_of_two_scale(pts: np.ndarray) -> float:
    """Power of two near the largest coordinate, or 1.0 when that is
    already a comfortable size (or all coordinates are zero)."""
    top = float(np.abs(pts).max())
    if top == 0.0 or 2.0 ** -100 <= top <= 2.0 ** 100:
        return 1.0
    return math.ldexp(1.0, math.frexp(top)[1])


def _coordinate_scale(pts: np.ndarray) -> float:
    if len(pts) == 0:
        return 0.0
    return float(max(np.abs(pts).max(), _extent(pts)))


def _extent(pts: np.ndarray) -> float:
    span = pts.max(axis=0) - pts.min(axis=0)
    return float(math.hypot(span[0], span[1]))


def _twice_area(pts: np.ndarray) -> float:
    x, y = pts[:, 0], pts[:, 1]
    return float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _drop_collinear(pts: np.ndarray, eps: float) -> np.ndarray:
    pts = list(pts)
    changed = True
    while changed and len(pts) > 3:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            ac = c - a
            norm = math.hypot(ac[0], ac[1])
            off = abs(ac[0] * (b[1] - a[1]) - ac[1] * (b[0] - a[0])) / norm if norm > 0 else 0.0
            if off <= eps:
                del pts[i]
                changed = True
                break
    return np.array(pts)


def _diameter(V: np.ndarray) -> float:
    m = len(V)
    if m == 1:
        return 0.0
    if m <= 3:
        return float(max(math.dist(V[i], V[j]) for i in range(m) for j in range(i + 1, m)))
    # rotating calipers over antipodal vertex pairs
    best = 0.0
    j = 1
    for i in range(m):
        ni = (i + 1) % m
        ex, ey = V[ni] - V[i]
        for _ in range(m):
            nj = (j + 1) % m
            fx, fy = V[nj] - V[j]
            if ex * fy - ey * fx > 0:
                j = nj
            else:
                break
        best = max(best, math.dist(V[i], V[j]), math.dist(V[ni], V[j]))
    return best


# ---------------------------------------------------------------------------
# Minkowski addition


def _insert_edges(angles: List[float], edges: List[tuple], new_edges) -> None:
    """Merge edges into a sorted edge list in place; parallel edges fuse."""
    for edge in new_edges:
        a = edge[0]
        i = bisect_left(angles, a - ANGLE_TOL)
        if i < len(angles) and angles[i] <= a + ANGLE_TOL:
            old = edges[i]
            edges[i] = (old[0], old[1] + edge[1], old[2] + edge[2], old[3] + edge[3])
        else:
            angles.insert(i, a)
            edges.insert(i, edge)


def _edge_tuples(P: ConvexPolygon) -> List[tuple]:
    provs = P.provenance.edge_tuples() if P.provenance is not None else [()] * len(P.edges)
    return [(a, dx, dy, p) for a, (dx, dy), p in zip(P.angles.tolist(), P.edges.tolist(), provs)]


def _merged_provenance(P: ConvexPolygon, Q: ConvexPolygon, edges) -> Optional[EdgeProvenance]:
    if P.provenance is None or Q.provenance is None:
        return None
    return EdgeProvenance.from_edge_tuples(edges, P.provenance.start_labels() + Q.provenance.start_labels())


def minkowski_sum(P: ConvexPolygon, Q: ConvexPolygon) -> ConvexPolygon:
    """``{p + q : p in P, q in Q}`` for convex polygons ``P`` and ``Q``.

    The two angle-sorted edge sequences are merged, edges of equal angle
    are fused into one, and the chain is laid out from the sum of the two
    start vertices. The result has at most ``m + n`` vertices.
    """
    start = (P.start[0] + Q.start[0], P.start[1] + Q.start[1])
    pe, qe = _edge_tuples(P), _edge_tuples(Q)
    if len(qe) > len(pe):
        pe, qe = qe, pe
    if len(qe) <= 2:
        angles = [e[0] for e in pe]
        merged = list(pe)
        _insert_edges(angles, merged, qe)
    else:
        merged = []
        i = j = 0
        while i < len(pe) or j < len(qe):
            if j == len(qe) or (i < len(pe) and pe[i][0] <= qe[j][0]):
                e = pe[i]
                i += 1
            else:
                e = qe[j]
                j += 1
            if merged and e[0] - merged[-1][0] <= ANGLE_TOL:
                old = merged[-1]
                merged[-1] = (old[0], old[1] + e[1], old[2] + e[2], old[3] + e[3])
            else:
                merged.append(e)
    S = ConvexPolygon._from_edge_list(start, merged, _merged_provenance(P, Q, merged))
    if len(S.edges) and np.hypot(S.edges[:, 0], S.edges[:, 1]).min() <= TOL_GEOM * S.scale:
        # an edge below tolerance leaves (near-)repeated vertices; normalise
        # the outline, at the cost of the edge provenance
        return ConvexPolygon.from_vertices(S.vertices)
    return S


def zonogon_from_diagonals(diagonals: Sequence[Diagonal], mode: str = "fast") -> ConvexPolygon:
    """Minkowski sum of a sequence of segments.

    ``mode="chain"`` adds the segments one at a time, left to right.
    ``mode="fast"`` sorts every edge of every segment by angle at once.
    Both give the same polygon, with at most two vertices per non-degenerate
    segment; zero-length segments only shift the result.
    """
    if len(diagonals) == 0:
        raise ValueError("need at least one diagonal")
    if mode == "chain":
        return _zonogon_chain(diagonals)
    if mode == "fast":
        p0 = np.array([d.p0 for d in diagonals], dtype=float)
        p1 = np.array([d.p1 for d in diagonals], dtype=float)
        return zonogon_from_arrays(p0, p1, [d.source_index for d in diagonals])
    raise ValueError(f"unknown mode {mode!r}; expected 'chain' or 'fast'")


def _zonogon_chain(diagonals: Sequence[Diagonal]) -> ConvexPolygon:
    # Equivalent to folding minkowski_sum(acc, segment_polygon(d)) left to
    # right, but merges into one accumulator in place instead of copying the
    # edge list at every step.
    sx = sy = 0.0
    angles: List[float] = []
    edges: List[tuple] = []
    start_labels = []
    for d in diagonals:
        (px, py), label, seg = diagonal_edges(d)
        sx += px
        sy += py
        start_labels.append((d.source_index, label))
        _insert_edges(angles, edges, seg)
    prov = EdgeProvenance.from_edge_tuples(edges, start_labels)
    return ConvexPolygon._from_edge_list((sx, sy), edges, prov)


def zonogon_from_arrays(p0: np.ndarray, p1: np.ndarray, sources=None) -> ConvexPolygon:
    """Fast zonogon assembly from segment endpoint arrays of shape (n, 2)."""
    p0 = np.asarray(p0, dtype=float).reshape(-1, 2)
    p1 = np.asarray(p1, dtype=float).reshape(-1, 2)
    n = len(p0)
    if n == 0:
        raise ValueError("need at least one diagonal")
    sources = np.arange(n, dtype=np.int64) if sources is None else np.asarray(sources, dtype=np.int64)
    d = p1 - p0
    live = (d[:, 0] != 0.0) | (d[:, 1] != 0.0)

    a = np.arctan2(d[:, 1] + 0.0, d[:, 0] + 0.0)
    a = np.where(a < 0.0, a + TWO_PI, a)
    a[a >= TWO_PI - ANGLE_TOL] = 0.0
    b = np.where(a < math.pi, a + math.pi, a - math.pi)
    b[b >= TWO_PI - ANGLE_TOL] = 0.0
    from_lo = a < b
    start = np.where(from_lo[:, None], p0, p1).sum(axis=0)

    k = int(live.sum())
    angles = np.concatenate([a[live], b[live]])
    vecs = np.concatenate([d[live], -d[live]])
    src = np.concatenate([sources[live], sources[live]])
    sign = np.concatenate([np.ones(k, dtype=np.int8), -np.ones(k, dtype=np.int8)])
    order = np.argsort(angles, kind="stable")
    angles, vecs, src, sign = angles[order], vecs[order], src[order], sign[order]

    if k:
        heads = np.flatnonzero(np.concatenate([[True], np.diff(angles) > ANGLE_TOL]))
        angles = angles[heads]
        vecs = np.add.reduceat(vecs, heads, axis=0)
    else:
        heads = np.empty(0, dtype=np.int64)
    offsets = np.append(heads, 2 * k)

    prov = None
    gen_order = np.argsort(sources, kind="stable")
    generators = sources[gen_order]
    if len(np.unique(generators)) == n:
        codes = np.where(live, np.where(from_lo, 0, 1), 2).astype(np.int8)
        prov = EdgeProvenance(src, sign, offsets, generators, codes[gen_order])
    return ConvexPolygon(tuple(start), angles, vecs.reshape(-1, 2), prov)


# ---------------------------------------------------------------------------
# Queries


def polygon_range(P: ConvexPolygon) -> ComplexBox:
    """Tightest axis-aligned box around the polygon."""
    V = P.vertices
    lo, hi = V.min(axis=0), V.max(axis=0)
    return ComplexBox(Interval(lo[0], hi[0]), Interval(lo[1], hi[1]))


def contains_origin(P: ConvexPolygon, tol: float = TOL_GEOM) -> bool:
    return P.origin_location(tol) != "outside"


def polygon_amplitude(P: ConvexPolygon, tol: float = TOL_GEOM) -> Interval:
    """Range of ``|z|`` over the polygon: the farthest vertex and the nearest
    boundary point (zero if the origin is inside)."""
    top = float(np.hypot(P.vertices[:, 0], P.vertices[:, 1]).max())
    if contains_origin(P, tol):
        return Interval(0.0, top)
    low = float(P.boundary_distance(np.zeros((1, 2)))[0])
    return Interval(min(low, top), top)


def polygon_argument(P: ConvexPolygon, tol: float = TOL_GEOM) -> Optional[Arc]:
    """Shortest arc holding ``arg z`` for every ``z`` in the polygon, or
    ``None`` when the polygon touches the origin."""
    if contains_origin(P, tol):
        return None
    V = P.vertices
    angles = np.arctan2(V[:, 1] + 0.0, V[:, 0] + 0.0)
    return minimal_arc(angles.tolist())


def convex_hull(points, tol: float = TOL_GEOM) -> ConvexPolygon:
    """Convex hull of a point set (Andrew's monotone chain)."""
    pts = np.unique(np.asarray(points, dtype=float).reshape(-1, 2), axis=0)
    unit = _power_of_two_scale(pts)
    if unit != 1.0:
        return convex_hull(pts / unit, tol)._rescaled(unit)
    if len(pts) <= 2:
        return ConvexPolygon.from_vertices(pts, tol)
    P = [tuple(p) for p in pts.tolist()]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in P:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(P):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return ConvexPolygon.from_vertices(lower[:-1] + upper[:-1], tol)


def hausdorff_distance(P: ConvexPolygon, Q: ConvexPolygon) -> float:
    """Hausdorff distance between two convex polygons.

    For convex sets the farthest point of one from the other is a vertex,
    so checking vertices in both directions is exact.
    """
    return float(max(P.distance(Q.vertices).max(), Q.distance(P.vertices).max()))

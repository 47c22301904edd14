"""Brute-force oracles for the interval DFT.

Nothing here goes through the Minkowski merge. Transforms are evaluated with
``numpy.exp`` coefficients and reachable sets are rebuilt as convex hulls
of box-corner images.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .dft import interval_dft_box, united_set
from .geometry import TOL_GEOM, ConvexPolygon, convex_hull, hausdorff_distance, polygon_range
from .interval import IntervalVector

CORNER_LIMIT = 20
_BLOCK = 1 << 15


class EnumerationLimitError(ValueError):
    """Refusal to enumerate ``2**N`` corners for a long signal."""


def random_signal(rng: np.random.Generator, N: int, mid_range: float = 10.0,
                  max_rad: float = 5.0) -> IntervalVector:
    """Random interval signal: midpoints uniform in ``[-mid_range, mid_range]``,
    radii uniform in ``[0, max_rad]``."""
    mid = rng.uniform(-mid_range, mid_range, N)
    rad = rng.uniform(0.0, max_rad, N)
    return IntervalVector.from_bounds(mid - rad, mid + rad)


def fourier_row(N: int, h: int) -> np.ndarray:
    n = np.arange(N)
    return np.exp(-2j * np.pi * h * n / N)


def pointwise_dft(signals, h: int) -> np.ndarray:
    """DFT at harmonic ``h`` of each row of ``signals`` (shape (k, N))."""
    signals = np.atleast_2d(np.asarray(signals, dtype=float))
    return signals @ fourier_row(signals.shape[1], h)


def corner_images(x: IntervalVector, h: int, limit: int = CORNER_LIMIT) -> np.ndarray:
    """DFT of every corner of the box, as complex numbers.

    Bit ``n`` of the corner index selects component ``n`` (0 = lo, 1 = hi);
    zero-width components contribute a single corner.
    """
    N = len(x)
    if N > limit:
        raise EnumerationLimitError(f"corner enumeration refused for N={N} > {limit}")
    w = fourier_row(N, h)
    free = np.flatnonzero(x.hi != x.lo)
    base = complex(x.lo @ w)
    steps = (x.hi - x.lo)[free] * w[free]
    k = len(free)
    out = np.empty(1 << k, dtype=complex)
    for s in range(0, 1 << k, _BLOCK):
        idx = np.arange(s, min(s + _BLOCK, 1 << k))
        bits = (idx[:, None] >> np.arange(k)[None, :]) & 1
        out[s:s + len(idx)] = base + bits @ steps
    return out


def _extreme_filter(pts: np.ndarray) -> np.ndarray:
    """Drop points strictly inside the octagon of extremes (Akl-Toussaint)."""
    if len(pts) < 64:
        return pts
    dirs = np.array([[1, 0], [1, 1], [0, 1], [-1, 1], [-1, 0], [-1, -1], [0, -1], [1, -1]], dtype=float)
    ext = pts[np.argmax(pts @ dirs.T, axis=0)]
    ext = np.unique(ext, axis=0)
    if len(ext) < 3:
        return pts
    ring = convex_hull(ext)
    if ring.is_degenerate:
        return pts
    V, E = ring.vertices, ring.edges
    cross = E[None, :, 0] * (pts[:, None, 1] - V[None, :, 1]) - E[None, :, 1] * (pts[:, None, 0] - V[None, :, 0])
    strictly_inside = (cross > 1e-12 * ring.scale).all(axis=1)
    return pts[~strictly_inside]


def corner_hull(x: IntervalVector, h: int, limit: int = CORNER_LIMIT) -> ConvexPolygon:
    """Convex hull of the DFT images of all ``2**N`` box corners.

    A linear map sends the box's corners onto a superset of the vertices of
    its image, so this hull is the exact reachable set.
    """
    z = corner_images(x, h, limit)
    pts = np.column_stack([z.real, z.imag])
    keep = [_extreme_filter(pts[s:s + _BLOCK]) for s in range(0, len(pts), _BLOCK)]
    return convex_hull(_extreme_filter(np.concatenate(keep)))


@dataclass(frozen=True)
class OracleReport:
    """Result of checking one harmonic against the oracles.

    Distances are absolute; tolerances apply relative to ``scale`` (the
    polygon's coordinate scale, floored by the signal magnitude). ``hausdorff_distance`` is ``None`` when the
    corner oracle was skipped.
    """

    harmonic: int
    hausdorff_distance: Optional[float]
    box_deviation: float
    samples_outside: int
    samples: int
    area_ratio: float
    scale: float
    tol: float = TOL_GEOM

    @property
    def passed(self) -> bool:
        slack = self.tol * self.scale
        hausdorff_ok = self.hausdorff_distance is None or self.hausdorff_distance <= slack
        return hausdorff_ok and self.box_deviation <= slack and self.samples_outside == 0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def signal_magnitude(x: IntervalVector) -> float:
    """``sum_n max(|lo_n|, |hi_n|)``: a bound on every DFT value of the box
    and the natural size of its round-off."""
    return float(np.maximum(np.abs(x.lo), np.abs(x.hi)).sum())


def tolerance_scale(polygon: ConvexPolygon, x: IntervalVector) -> float:
    """Length that relative tolerances are multiplied by.

    The polygon's own scale, floored by the signal magnitude so that exact
    cancellation (a polygon at the origin) still leaves room for round-off.
    """
    return max(polygon.scale, polygon.diameter, signal_magnitude(x), np.finfo(float).tiny)


def box_deviation(polygon: ConvexPolygon, x: IntervalVector, h: int) -> float:
    """Largest endpoint gap between the polygon's bounding box and the
    interval-arithmetic box."""
    a, b = polygon_range(polygon), interval_dft_box(x, h)
    return max(abs(a.re.lo - b.re.lo), abs(a.re.hi - b.re.hi), abs(a.im.lo - b.im.lo), abs(a.im.hi - b.im.hi))


def area_ratio(polygon: ConvexPolygon, x: IntervalVector, h: int) -> float:
    """Polygon area over box area; 1 by convention when the box is flat."""
    box = interval_dft_box(x, h)
    box_area = box.re.width * box.im.width
    if box_area <= 0.0:
        return 1.0
    return polygon.area() / box_area


def compare_naive(x: IntervalVector, h: int, polygon: Optional[ConvexPolygon] = None,
                  mode: str = "fast", tol: float = TOL_GEOM) -> OracleReport:
    """How far the exact polygon's range is from the naive box, and how much
    area the box wastes."""
    polygon = united_set(x, h, mode) if polygon is None else polygon
    return OracleReport(h, None, box_deviation(polygon, x, h), 0, 0,
                        area_ratio(polygon, x, h), tolerance_scale(polygon, x), tol)


def sample_check(x: IntervalVector, h: int, polygon: ConvexPolygon, count: int, seed: int,
                 tol: float = TOL_GEOM) -> OracleReport:
    """Map ``count`` uniform samples of the box through the DFT and count the
    images farther than ``tol`` (relative) outside ``polygon``."""
    rng = np.random.default_rng(seed)
    scale = tolerance_scale(polygon, x)
    outside = 0
    rows = max(1, 4_000_000 // max(len(x), 1))
    done = 0
    while done < count:
        k = min(rows, count - done)
        signals = rng.uniform(x.lo, x.hi, size=(k, len(x)))
        z = pointwise_dft(signals, h)
        dist = polygon.distance(np.column_stack([z.real, z.imag]))
        outside += int((dist > tol * scale).sum())
        done += k
    return OracleReport(h, None, 0.0, outside, count, 1.0, scale, tol)


def verify_harmonic(x: IntervalVector, h: int, samples: int = 10_000, seed: int = 0,
                    mode: str = "fast", limit: int = CORNER_LIMIT, tol: float = TOL_GEOM) -> OracleReport:
    """Run every oracle on one harmonic: corner hull (when ``N <= limit``),
    naive box comparison and Monte Carlo containment."""
    polygon = united_set(x, h, mode)
    hd = None
    if len(x) <= limit:
        hd = hausdorff_distance(polygon, corner_hull(x, h, limit))
    naive = compare_naive(x, h, polygon, tol=tol)
    sampled = sample_check(x, h, polygon, samples, seed + h, tol)
    return OracleReport(h, hd, naive.box_deviation, sampled.samples_outside, samples,
                        naive.area_ratio, tolerance_scale(polygon, x), tol)

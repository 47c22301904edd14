"""Rectangular complex intervals and angular arcs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Tuple

from .interval import Interval, arith

Point = Tuple[float, float]

TWO_PI = 2.0 * math.pi


def point_argument(x: float, y: float) -> float:
    """Argument of ``x + iy`` in ``(-pi, pi]``; undefined (ValueError) at 0."""
    if x == 0.0 and y == 0.0:
        raise ValueError("argument of zero is undefined")
    # adding 0.0 turns -0.0 into +0.0 so the negative real axis maps to +pi
    return math.atan2(y + 0.0, x + 0.0)


@dataclass(frozen=True)
class Arc:
    """A closed arc of angles, traversed counter-clockwise from ``lo`` to ``hi``.

    Both endpoints lie in ``(-pi, pi]``. When the arc crosses the negative
    real axis, ``lo > hi`` and :attr:`wrapped` is true.
    """

    lo: float
    hi: float

    @property
    def wrapped(self) -> bool:
        return self.lo > self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo + (TWO_PI if self.wrapped else 0.0)

    def contains(self, angle: float, tol: float = 0.0) -> bool:
        offset = (angle - self.lo) % TWO_PI
        if offset > TWO_PI - tol:
            offset -= TWO_PI
        return -tol <= offset <= self.width + tol


def minimal_arc(angles: Iterable[float]) -> Arc:
    """Shortest arc containing every angle in ``angles``.

    The complement of the widest circular gap between consecutive sorted
    angles. For the angles of a convex set that avoids the origin this gap
    exceeds pi, so the answer is unique.
    """
    ordered = sorted(angles)
    if not ordered:
        raise ValueError("need at least one angle")
    n = len(ordered)
    best_gap = ordered[0] + TWO_PI - ordered[-1]
    best = 0
    for i in range(1, n):
        gap = ordered[i] - ordered[i - 1]
        if gap > best_gap:
            best_gap, best = gap, i
    return Arc(ordered[best], ordered[best - 1])


@dataclass(frozen=True)
class ComplexBox:
    """``re + i*im``: the set of complex numbers with real part in ``re`` and
    imaginary part in ``im``."""

    re: Interval
    im: Interval

    @classmethod
    def from_bounds(cls, re_lo, re_hi, im_lo, im_hi) -> "ComplexBox":
        return cls(Interval(re_lo, re_hi), Interval(im_lo, im_hi))

    @classmethod
    def point(cls, z: complex) -> "ComplexBox":
        z = complex(z)
        return cls(Interval.point(z.real), Interval.point(z.imag))

    def vertices(self) -> Tuple[Point, Point, Point, Point]:
        u, v = self.re, self.im
        return ((u.lo, v.lo), (u.hi, v.lo), (u.lo, v.hi), (u.hi, v.hi))

    def contains(self, z: complex) -> bool:
        z = complex(z)
        return z.real in self.re and z.imag in self.im

    def contains_origin(self) -> bool:
        return 0.0 in self.re and 0.0 in self.im

    def issubset(self, other: "ComplexBox") -> bool:
        return self.re.issubset(other.re) and self.im.issubset(other.im)

    def __add__(self, other: "ComplexBox") -> "ComplexBox":
        return cbox_add_sub("add", self, other)

    def __sub__(self, other: "ComplexBox") -> "ComplexBox":
        return cbox_add_sub("sub", self, other)


def cbox_add_sub(op: str, z: ComplexBox, w: ComplexBox, method: str = "componentwise") -> ComplexBox:
    """Sum or difference of two complex boxes.

    ``method="vertices"`` evaluates all 16 vertex pairs and takes their
    bounding box; ``"componentwise"`` applies interval add/sub to the real
    and imaginary parts. The two agree exactly.
    """
    if op not in ("add", "sub"):
        raise ValueError(f"complex boxes support add and sub only, got {op!r}")
    if method == "componentwise":
        return ComplexBox(arith(op, z.re, w.re), arith(op, z.im, w.im))
    if method != "vertices":
        raise ValueError(f"unknown method {method!r}")
    sign = 1.0 if op == "add" else -1.0
    xs, ys = [], []
    for a, b in z.vertices():
        for c, d in w.vertices():
            xs.append(a + sign * c)
            ys.append(b + sign * d)
    return ComplexBox(Interval(min(xs), max(xs)), Interval(min(ys), max(ys)))


class Diagonal(NamedTuple):
    """Oriented segment ``p0 -> p1``: the image of a generator interval under
    a real-linear map into the plane. ``p0`` comes from the generator's lower
    endpoint, ``p1`` from its upper one."""

    p0: Point
    p1: Point
    source_index: int = 0

    @property
    def vector(self) -> Point:
        return (self.p1[0] - self.p0[0], self.p1[1] - self.p0[1])

    @property
    def is_degenerate(self) -> bool:
        return self.p0[0] == self.p1[0] and self.p0[1] == self.p1[1]

    @property
    def midpoint(self) -> Point:
        return ((self.p0[0] + self.p1[0]) / 2.0, (self.p0[1] + self.p1[1]) / 2.0)

    def bounding_box(self) -> ComplexBox:
        (x0, y0), (x1, y1) = self.p0, self.p1
        return ComplexBox(Interval(min(x0, x1), max(x0, x1)), Interval(min(y0, y1), max(y0, y1)))


def scale_diagonal(x: Interval, u: float, v: float, source_index: int = 0) -> Diagonal:
    """Exact image of ``x`` under ``t -> t * (u + iv)``: an oriented segment.

    The first vertex comes from ``x.lo`` and the second from ``x.hi``.
    Its bounding box is ``x.scale(u) + i * x.scale(v)``.
    """
    return Diagonal((u * x.lo, v * x.lo), (u * x.hi, v * x.hi), source_index)


def box_amplitude(z: ComplexBox) -> Interval:
    """Range of ``|w|`` for ``w`` in the box.

    The maximum is always at a vertex. The minimum is at a vertex unless
    the box meets an axis: zero when it holds the origin, the nearer
    horizontal edge when it straddles the imaginary axis, and the nearer
    vertical edge when it straddles the real axis.
    """
    amps = [math.hypot(a, b) for a, b in z.vertices()]
    top = max(amps)
    zero_re = 0.0 in z.re
    zero_im = 0.0 in z.im
    if zero_re and zero_im:
        return Interval(0.0, top)
    if zero_re:
        return Interval(min(abs(z.im.lo), abs(z.im.hi)), top)
    if zero_im:
        return Interval(min(abs(z.re.lo), abs(z.re.hi)), top)
    return Interval(min(amps), top)


def box_argument(z: ComplexBox) -> Optional[Arc]:
    """Range of ``arg w`` for ``w`` in the box, or ``None`` when the closed
    box touches the origin."""
    if z.contains_origin():
        return None
    return minimal_arc(point_argument(a, b) for a, b in z.vertices())

"""Closed real intervals and their endpoint arithmetic.

Endpoints are plain binary floats with round-to-nearest. No outward
rounding is applied, so results are rigorous with respect to the input
uncertainty but not verified against round-off.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

Real = Union[int, float]

OPS = ("add", "sub", "mul", "div")


class IntervalDomainError(ZeroDivisionError):
    """Raised when an operation is undefined on its interval operands."""


@dataclass(frozen=True)
class Interval:
    """The closed set ``{x : lo <= x <= hi}``.

    ``lo == hi`` is allowed and stands for an ordinary real number.
    """

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoints cannot be NaN")
        if lo > hi:
            raise ValueError(f"interval lower endpoint {lo!r} exceeds upper endpoint {hi!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: Real) -> "Interval":
        return cls(value, value)

    @property
    def mid(self) -> float:
        return (self.hi + self.lo) / 2.0

    @property
    def rad(self) -> float:
        return (self.hi - self.lo) / 2.0

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, p: Real) -> bool:
        return self.lo <= p <= self.hi

    def __contains__(self, p: Real) -> bool:
        return self.contains(p)

    def issubset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def scale(self, c: Real) -> "Interval":
        """Product with a real scalar, i.e. ``[c, c] * self``."""
        a, b = c * self.lo, c * self.hi
        return Interval(min(a, b), max(a, b))

    def __add__(self, other):
        return arith("add", self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return arith("sub", self, _coerce(other))

    def __rsub__(self, other):
        return arith("sub", _coerce(other), self)

    def __mul__(self, other):
        return arith("mul", self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return arith("div", self, _coerce(other))

    def __rtruediv__(self, other):
        return arith("div", _coerce(other), self)

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"


def _coerce(value) -> Interval:
    if isinstance(value, Interval):
        return value
    if isinstance(value, (int, float, np.floating, np.integer)):
        return Interval.point(float(value))
    return NotImplemented


def arith(op: str, x: Interval, y: Interval) -> Interval:
    """Exact range of ``x op y`` over the box ``x * y``.

    ``op`` is one of ``"add"``, ``"sub"``, ``"mul"``, ``"div"``. Division
    by an interval containing zero raises :class:`IntervalDomainError`.
    """
    if op == "add":
        return Interval(x.lo + y.lo, x.hi + y.hi)
    if op == "sub":
        return Interval(x.lo - y.hi, x.hi - y.lo)
    if op == "mul":
        products = (x.lo * y.lo, x.hi * y.lo, x.lo * y.hi, x.hi * y.hi)
        return Interval(min(products), max(products))
    if op == "div":
        if y.lo <= 0.0 <= y.hi:
            raise IntervalDomainError(f"division by {y!r}, which contains zero")
        # quotients of endpoints directly: a reciprocal can overflow
        quotients = (x.lo / y.lo, x.hi / y.lo, x.lo / y.hi, x.hi / y.hi)
        return Interval(min(quotients), max(quotients))
    raise ValueError(f"unknown operation {op!r}; expected one of {OPS}")


def mul_sign_cases(x: Interval, y: Interval) -> Interval:
    """Interval product using the nine sign cases of the operands.

    Needs at most two real multiplications outside the mixed-mixed case.
    Always equal to ``arith("mul", x, y)``.
    """
    xl, xh, yl, yh = x.lo, x.hi, y.lo, y.hi
    if xl >= 0.0:
        if yl >= 0.0:
            return Interval(xl * yl, xh * yh)
        if yh <= 0.0:
            return Interval(xh * yl, xl * yh)
        return Interval(xh * yl, xh * yh)
    if xh <= 0.0:
        if yl >= 0.0:
            return Interval(xl * yh, xh * yl)
        if yh <= 0.0:
            return Interval(xh * yh, xl * yl)
        return Interval(xl * yh, xl * yl)
    if yl >= 0.0:
        return Interval(xl * yh, xh * yh)
    if yh <= 0.0:
        return Interval(xh * yl, xl * yl)
    return Interval(min(xl * yh, xh * yl), max(xl * yl, xh * yh))


class IntervalVector(Sequence[Interval]):
    """An ordered, non-interactive collection of intervals (an N-box)."""

    __slots__ = ("_components", "_lo", "_hi")

    def __init__(self, components: Iterable[Interval]):
        comps = tuple(c if isinstance(c, Interval) else Interval(*c) for c in components)
        if not comps:
            raise ValueError("an interval vector needs at least one component")
        self._components = comps
        self._lo = np.array([c.lo for c in comps], dtype=float)
        self._hi = np.array([c.hi for c in comps], dtype=float)
        self._lo.flags.writeable = False
        self._hi.flags.writeable = False

    @classmethod
    def from_bounds(cls, lo, hi) -> "IntervalVector":
        lo = np.asarray(lo, dtype=float).ravel()
        hi = np.asarray(hi, dtype=float).ravel()
        if lo.shape != hi.shape:
            raise ValueError("lower and upper bound arrays differ in length")
        return cls(Interval(a, b) for a, b in zip(lo.tolist(), hi.tolist()))

    @classmethod
    def from_points(cls, values) -> "IntervalVector":
        values = np.asarray(values, dtype=float).ravel()
        return cls.from_bounds(values, values)

    @property
    def lo(self) -> np.ndarray:
        return self._lo

    @property
    def hi(self) -> np.ndarray:
        return self._hi

    @property
    def mid(self) -> np.ndarray:
        return (self._hi + self._lo) / 2.0

    @property
    def rad(self) -> np.ndarray:
        return (self._hi - self._lo) / 2.0

    def issubset(self, other: "IntervalVector") -> bool:
        return len(self) == len(other) and all(a.issubset(b) for a, b in zip(self, other))

    def weighted_sum(self, weights) -> Interval:
        """Range of ``sum_n weights[n] * x_n`` over the box.

        Uses the scalar product rule per component, so with no repeated
        variables this is the exact range.
        """
        c = np.asarray(weights, dtype=float)
        a, b = c * self._lo, c * self._hi
        return Interval(float(np.minimum(a, b).sum()), float(np.maximum(a, b).sum()))

    def __len__(self) -> int:
        return len(self._components)

    def __getitem__(self, index):
        return self._components[index]

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._components)

    def __eq__(self, other):
        if not isinstance(other, IntervalVector):
            return NotImplemented
        return self._components == other._components

    def __hash__(self):
        return hash(self._components)

    def __repr__(self):
        body = ", ".join(f"[{c.lo!r}, {c.hi!r}]" for c in self._components)
        return f"IntervalVector({body})"

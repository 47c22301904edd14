"""The discrete Fourier transform of an interval signal.

For each harmonic ``h`` the transform ``sum_n x_n * exp(-2j*pi*h*n/N)`` maps
the input box onto a convex polygon in the complex plane. Every addend is a
segment (the image of one interval), so the polygon is their Minkowski sum,
a zonogon with at most ``2N`` vertices. Amplitude and phase bounds are read
off that polygon.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .complex_box import Arc, ComplexBox, scale_diagonal
from .geometry import (
    HI,
    TOL_GEOM,
    ConvexPolygon,
    polygon_amplitude,
    polygon_argument,
    zonogon_from_arrays,
    zonogon_from_diagonals,
)
from .interval import Interval, IntervalVector

INTERIOR = "interior"
MODES = ("chain", "fast")

Configuration = Union[Tuple[str, ...], str]


class MissingProvenanceError(ValueError):
    """The polygon carries no record of which input produced each edge."""


def coefficient_arrays(N: int, h: int) -> Tuple[np.ndarray, np.ndarray]:
    """Real and imaginary parts ``(u, v)`` of ``exp(-2j*pi*h*n/N)``, n = 0..N-1.

    ``h*n`` is reduced modulo ``N`` in integers, then split into a quarter
    turn count and a remainder angle below pi/2, so multiples of a quarter
    turn come out exact.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    if not 0 <= h < N:
        raise ValueError(f"harmonic {h} outside [0, {N - 1}]")
    k = (h * np.arange(N, dtype=np.int64)) % N
    quarter, rem = np.divmod(4 * k, N)
    theta = (math.pi / 2.0) * rem / N
    c, s = np.cos(theta), np.sin(theta)
    cos = np.choose(quarter, [c, -s, -c, s])
    sin = np.choose(quarter, [s, c, -s, -c])
    return cos + 0.0, -sin + 0.0


def coefficients(N: int, h: int) -> List[Tuple[float, float]]:
    """Fourier coefficients at harmonic ``h`` as ``(u, v)`` pairs."""
    u, v = coefficient_arrays(N, h)
    return list(zip(u.tolist(), v.tolist()))


def dft_point(values, h: int) -> complex:
    """Ordinary DFT of a real signal at harmonic ``h``."""
    x = np.asarray(values, dtype=float)
    u, v = coefficient_arrays(len(x), h)
    return complex(float(x @ u), float(x @ v))


def interval_dft_box(x: IntervalVector, h: int) -> ComplexBox:
    """Interval-arithmetic evaluation of the DFT at harmonic ``h``.

    Each input appears once, so this box is exactly the bounding box of the
    reachable set.
    """
    u, v = coefficient_arrays(len(x), h)
    return ComplexBox(x.weighted_sum(u), x.weighted_sum(v))


def diagonals(x: IntervalVector, h: int):
    """Image segment of each input interval at harmonic ``h``."""
    u, v = coefficient_arrays(len(x), h)
    return [scale_diagonal(xn, un, vn, n) for n, (xn, un, vn) in enumerate(zip(x, u.tolist(), v.tolist()))]


def united_set(x: IntervalVector, h: int, mode: str = "fast") -> ConvexPolygon:
    """Exact set of DFT values at harmonic ``h`` over all signals in ``x``.

    ``mode="chain"`` adds the image segments one by one; ``"fast"`` sorts
    all their edges at once. The polygon keeps per-edge provenance for
    :func:`critical_configuration`.
    """
    if mode == "chain":
        return zonogon_from_diagonals(diagonals(x, h), mode="chain")
    if mode == "fast":
        u, v = coefficient_arrays(len(x), h)
        p0 = np.column_stack([u * x.lo, v * x.lo])
        p1 = np.column_stack([u * x.hi, v * x.hi])
        return zonogon_from_arrays(p0, p1)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def critical_configuration(polygon: ConvexPolygon, target: str = "max_amplitude",
                           tol: float = TOL_GEOM) -> Configuration:
    """Endpoint choice per input that attains the amplitude bound ``target``.

    Returns a tuple with ``"lo"``, ``"hi"`` or ``"any"`` (zero-width input)
    for each input in index order. For ``"min_amplitude"`` the answer is
    :data:`INTERIOR` when the nearest point to the origin is not a vertex.
    Ties go to the first vertex counter-clockwise from the start vertex.
    """
    prov = polygon.provenance
    if prov is None:
        raise MissingProvenanceError("polygon was not built from input segments")
    V = polygon.vertices
    norms = np.hypot(V[:, 0], V[:, 1])
    slack = tol * polygon.scale
    if target == "max_amplitude":
        vertex = int(np.argmax(norms >= norms.max() - slack))
    elif target == "min_amplitude":
        if polygon.origin_location(tol) == "interior":
            return INTERIOR
        nearest = float(polygon.boundary_distance(np.zeros((1, 2)))[0])
        if norms.min() - nearest > slack:
            return INTERIOR
        vertex = int(np.argmax(norms <= nearest + slack))
    else:
        raise ValueError(f"unknown target {target!r}")
    return prov.configuration_at(vertex)


def configuration_signal(x: IntervalVector, config: Sequence[str]) -> np.ndarray:
    """The corner signal of ``x`` selected by an endpoint configuration."""
    if config == INTERIOR:
        raise ValueError("an interior minimiser has no corner signal")
    if len(config) != len(x):
        raise ValueError("configuration length differs from the signal length")
    return np.where(np.asarray(config) == HI, x.hi, x.lo)


@dataclass(frozen=True)
class SpectrumBounds:
    """Everything known about one harmonic of an interval DFT.

    ``origin`` is ``"outside"``, ``"boundary"`` or ``"interior"`` and says
    where the origin sits relative to ``polygon``; the phase is undefined
    (``None``) unless it is ``"outside"``.
    """

    h: int
    polygon: ConvexPolygon
    box: ComplexBox
    amplitude: Interval
    phase: Optional[Arc]
    origin: str
    config_max: Configuration
    config_min: Configuration

    @property
    def phase_defined(self) -> bool:
        return self.phase is not None

    @property
    def phase_undefined_reason(self) -> Optional[str]:
        return None if self.origin == "outside" else f"origin_{self.origin}"


def harmonic_bounds(x: IntervalVector, h: int, mode: str = "fast") -> SpectrumBounds:
    polygon = united_set(x, h, mode)
    return SpectrumBounds(
        h=h,
        polygon=polygon,
        box=interval_dft_box(x, h),
        amplitude=polygon_amplitude(polygon),
        phase=polygon_argument(polygon),
        origin=polygon.origin_location(),
        config_max=critical_configuration(polygon, "max_amplitude"),
        config_min=critical_configuration(polygon, "min_amplitude"),
    )


def select_harmonics(N: int, harmonics: Union[str, Iterable[int]] = "all") -> List[int]:
    """Resolve ``"all"``, ``"half"`` (0..floor(N/2)) or explicit indices."""
    if isinstance(harmonics, str):
        if harmonics == "all":
            return list(range(N))
        if harmonics == "half":
            return list(range(N // 2 + 1))
        raise ValueError(f"unknown harmonic selection {harmonics!r}")
    chosen = [int(h) for h in harmonics]
    bad = [h for h in chosen if not 0 <= h < N]
    if bad:
        raise ValueError(f"harmonics {bad} outside [0, {N - 1}]")
    return chosen


def spectrum(x: IntervalVector, harmonics: Union[str, Iterable[int]] = "all",
             mode: str = "fast", threads: int = 1) -> List[SpectrumBounds]:
    """Bounds for each requested harmonic, in the order requested.

    Harmonics are independent; with ``threads > 1`` they are computed on a
    thread pool.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    hs = select_harmonics(len(x), harmonics)
    if threads > 1 and len(hs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda h: harmonic_bounds(x, h, mode), hs))
    return [harmonic_bounds(x, h, mode) for h in hs]

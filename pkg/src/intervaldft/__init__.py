"""Exact bounds on the discrete Fourier transform of interval-valued signals."""
from .complex_box import Arc, ComplexBox, Diagonal, box_amplitude, box_argument, cbox_add_sub, scale_diagonal
from .dft import (
    INTERIOR,
    MissingProvenanceError,
    SpectrumBounds,
    coefficients,
    critical_configuration,
    configuration_signal,
    dft_point,
    harmonic_bounds,
    interval_dft_box,
    spectrum,
    united_set,
)
from .geometry import (
    ConvexPolygon,
    contains_origin,
    convex_hull,
    hausdorff_distance,
    minkowski_sum,
    polygon_amplitude,
    polygon_argument,
    polygon_range,
    zonogon_from_diagonals,
)
from .interval import Interval, IntervalDomainError, IntervalVector, arith, mul_sign_cases
from .verification import OracleReport, compare_naive, corner_hull, sample_check

__all__ = [
    "Arc", "ComplexBox", "ConvexPolygon", "Diagonal", "INTERIOR", "Interval", "IntervalDomainError",
    "IntervalVector", "MissingProvenanceError", "OracleReport", "SpectrumBounds", "arith", "box_amplitude",
    "box_argument", "cbox_add_sub", "coefficients", "compare_naive", "configuration_signal", "contains_origin",
    "convex_hull", "corner_hull", "critical_configuration", "dft_point", "harmonic_bounds", "hausdorff_distance",
    "interval_dft_box", "minkowski_sum", "mul_sign_cases", "polygon_amplitude", "polygon_argument",
    "polygon_range", "sample_check", "scale_diagonal", "spectrum", "united_set", "zonogon_from_diagonals",
]

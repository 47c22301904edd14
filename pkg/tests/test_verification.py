import numpy as np
import pytest

from intervaldft import ConvexPolygon, IntervalVector, hausdorff_distance, united_set
from intervaldft.verification import (
    EnumerationLimitError,
    OracleReport,
    compare_naive,
    corner_hull,
    corner_images,
    random_signal,
    sample_check,
    signal_magnitude,
    verify_harmonic,
)

PAIR = IntervalVector.from_bounds([0, 0], [1, 1])


class TestCornerHull:
    def test_pair_h1(self):
        np.testing.assert_allclose(corner_hull(PAIR, 1).vertices, [[-1, 0], [1, 0]], atol=1e-15)

    def test_corner_order(self):
        # index bit n selects component n: 0 -> lo, 1 -> hi
        x = IntervalVector.from_bounds([0, 0], [1, 10])
        np.testing.assert_allclose(corner_images(x, 0), [0, 1, 10, 11])

    def test_zero_width_component_gives_one_corner(self):
        x = IntervalVector.from_bounds([0, 5, 0], [1, 5, 1])
        assert len(corner_images(x, 0)) == 4

    def test_degenerate_is_point(self):
        assert corner_hull(IntervalVector.from_points([1.0, -2.0, 0.5]), 1).n_vertices == 1

    def test_h0_is_real_segment(self, rng):
        x = random_signal(rng, 6)
        np.testing.assert_allclose(corner_hull(x, 0).vertices, [[x.lo.sum(), 0], [x.hi.sum(), 0]], atol=1e-12)

    def test_refuses_long_signals(self):
        with pytest.raises(EnumerationLimitError):
            corner_hull(IntervalVector.from_points(np.zeros(21)), 0)

    def test_filter_keeps_hull_for_many_corners(self, rng):
        x = random_signal(rng, 14)
        P, Q = corner_hull(x, 3), united_set(x, 3)
        scale = max(P.diameter, signal_magnitude(x))
        assert hausdorff_distance(P, Q) <= 1e-9 * scale


class TestSampleCheck:
    def test_united_set_contains_samples(self, rng):
        x = random_signal(rng, 8)
        for h in range(8):
            r = sample_check(x, h, united_set(x, h), 2000, seed=h)
            assert r.samples_outside == 0 and r.verdict == "pass"

    def test_shrunk_polygon_is_caught(self, rng):
        x = random_signal(rng, 6)
        P = united_set(x, 1)
        centre = P.vertices.mean(axis=0)
        shrunk = ConvexPolygon.from_vertices(centre + 0.9 * (P.vertices - centre))
        assert sample_check(x, 1, shrunk, 20000, seed=0).samples_outside > 0

    def test_zero_samples(self):
        r = sample_check(PAIR, 1, united_set(PAIR, 1), 0, seed=0)
        assert r.samples_outside == 0 and r.passed

    def test_deterministic(self, rng):
        x = random_signal(rng, 5)
        P = ConvexPolygon.point((0.0, 0.0))
        assert sample_check(x, 1, P, 500, 7) == sample_check(x, 1, P, 500, 7)


class TestCompareNaive:
    def test_degenerate(self):
        r = compare_naive(IntervalVector.from_points([1.0, 2.0, 3.0]), 1)
        assert r.box_deviation <= 1e-15 and r.area_ratio == 1.0

    def test_pair_segment(self):
        r = compare_naive(PAIR, 1)
        assert r.box_deviation == 0.0 and r.area_ratio == 1.0

    def test_random_n8(self, rng):
        for _ in range(10):
            r = compare_naive(random_signal(rng, 8), 1)
            assert r.box_deviation <= 1e-9
            assert 0.0 < r.area_ratio <= 1.0


class TestReport:
    def test_verdict_rules(self):
        base = dict(harmonic=1, box_deviation=0.0, samples_outside=0, samples=10, area_ratio=1.0, scale=1.0)
        assert OracleReport(hausdorff_distance=None, **base).verdict == "pass"
        assert OracleReport(hausdorff_distance=1e-3, **base).verdict == "fail"
        assert OracleReport(hausdorff_distance=0.0, **{**base, "samples_outside": 1}).verdict == "fail"
        assert OracleReport(hausdorff_distance=0.0, **{**base, "box_deviation": 1.0}).verdict == "fail"

    def test_full_verification_passes(self, rng):
        x = random_signal(rng, 9)
        for h in range(9):
            r = verify_harmonic(x, h, samples=1000, seed=3)
            assert r.passed, r
            assert r.hausdorff_distance is not None

    def test_corner_stage_skipped_above_limit(self, rng):
        r = verify_harmonic(random_signal(rng, 25), 2, samples=200)
        assert r.hausdorff_distance is None and r.passed

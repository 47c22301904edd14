import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from intervaldft import Arc, ComplexBox, Interval, box_amplitude, box_argument, cbox_add_sub, scale_diagonal
from intervaldft.complex_box import minimal_arc, point_argument

from conftest import intervals, nested_intervals

SQRT2 = math.sqrt(2.0)


def dense_grid(z, n=301):
    u = np.linspace(z.re.lo, z.re.hi, n)
    v = np.linspace(z.im.lo, z.im.hi, n)
    U, V = np.meshgrid(u, v)
    return U.ravel(), V.ravel()


class TestBoxArithmetic:
    def test_vertices_order(self):
        z = ComplexBox.from_bounds(0, 1, 2, 3)
        assert z.vertices() == ((0, 2), (1, 2), (0, 3), (1, 3))

    def test_add(self):
        z = ComplexBox.from_bounds(0, 1, 0, 1)
        w = ComplexBox.from_bounds(2, 3, -1, 0)
        assert z + w == ComplexBox.from_bounds(2, 4, -1, 1)

    def test_self_subtraction(self):
        z = ComplexBox.from_bounds(1, 2, 1, 2)
        assert z - z == ComplexBox.from_bounds(-1, 1, -1, 1)

    def test_additive_identity(self):
        z = ComplexBox.from_bounds(-1, 2, 0.5, 0.75)
        assert z + ComplexBox.point(0) == z

    @pytest.mark.parametrize("op", ["add", "sub"])
    @given(a=intervals(), b=intervals(), c=intervals(), d=intervals())
    def test_vertex_pairs_equal_componentwise(self, op, a, b, c, d):
        z, w = ComplexBox(a, b), ComplexBox(c, d)
        assert cbox_add_sub(op, z, w, "vertices") == cbox_add_sub(op, z, w, "componentwise")

    @pytest.mark.parametrize("op", ["add", "sub"])
    @given(data=st.data())
    def test_inclusion_monotone(self, op, data):
        (ai, ao), (bi, bo), (ci, co), (di, do) = (data.draw(nested_intervals()) for _ in range(4))
        inner = cbox_add_sub(op, ComplexBox(ai, bi), ComplexBox(ci, di))
        outer = cbox_add_sub(op, ComplexBox(ao, bo), ComplexBox(co, do))
        assert inner.issubset(outer)

    def test_rejects_mul(self):
        z = ComplexBox.point(1)
        with pytest.raises(ValueError):
            cbox_add_sub("mul", z, z)


class TestScaleDiagonal:
    def test_fourier_addend_n0(self):
        d = scale_diagonal(Interval(-2, 0), 1.0, 0.0)
        assert d.p0 == (-2.0, 0.0) and d.p1 == (0.0, 0.0)

    def test_degenerate_generator(self):
        d = scale_diagonal(Interval.point(2.0), 0.6, -0.8)
        assert d.is_degenerate and d.p0 == (1.2, -1.6)

    def test_eighth_turn(self):
        c = math.cos(math.pi / 4)
        d = scale_diagonal(Interval(1, 3), c, -c)
        np.testing.assert_allclose(d.p0, (0.707107, -0.707107), atol=1e-6)
        np.testing.assert_allclose(d.p1, (2.121320, -2.121320), atol=1e-6)

    @given(intervals(), st.floats(-1, 1), st.floats(-1, 1))
    def test_bounding_box_is_componentwise_product(self, x, u, v):
        d = scale_diagonal(x, u, v)
        assert d.bounding_box() == ComplexBox(x.scale(u), x.scale(v))

    def test_vector_and_midpoint(self):
        d = scale_diagonal(Interval(1, 3), 1.0, 2.0)
        assert d.vector == (2.0, 4.0)
        assert d.midpoint == (2.0, 4.0)


class TestAmplitude:
    def test_first_quadrant(self):
        a = box_amplitude(ComplexBox.from_bounds(1, 2, 1, 2))
        assert a.lo == pytest.approx(SQRT2, abs=1e-12) and a.hi == pytest.approx(2 * SQRT2, abs=1e-12)

    def test_origin_inside(self):
        assert box_amplitude(ComplexBox.from_bounds(-1, 1, -1, 1)) == Interval(0, SQRT2)

    def test_straddles_imaginary_axis(self):
        a = box_amplitude(ComplexBox.from_bounds(-1, 1, 2, 3))
        assert a.lo == 2.0 and a.hi == pytest.approx(math.sqrt(10), abs=1e-15)

    def test_straddles_real_axis(self):
        a = box_amplitude(ComplexBox.from_bounds(-3, -2, -1, 1))
        assert a.lo == 2.0 and a.hi == pytest.approx(math.sqrt(10), abs=1e-15)

    @given(intervals(st.floats(-5, 5)), intervals(st.floats(-5, 5)))
    def test_contains_samples(self, re, im):
        z = ComplexBox(re, im)
        a = box_amplitude(z)
        u, v = dense_grid(z, 41)
        r = np.hypot(u, v)
        assert r.min() >= a.lo - 1e-12 and r.max() <= a.hi + 1e-12


class TestArgument:
    def test_first_quadrant(self):
        arc = box_argument(ComplexBox.from_bounds(1, 2, 1, 2))
        assert arc.lo == pytest.approx(math.atan(0.5), abs=1e-15)
        assert arc.hi == pytest.approx(math.atan(2.0), abs=1e-15)
        assert not arc.wrapped

    def test_origin_inside_is_undefined(self):
        assert box_argument(ComplexBox.from_bounds(-1, 1, -1, 1)) is None

    def test_origin_on_boundary_is_undefined(self):
        assert box_argument(ComplexBox.from_bounds(0, 1, -1, 1)) is None

    def test_positive_real_point(self):
        assert box_argument(ComplexBox.from_bounds(1, 1, 0, 0)) == Arc(0.0, 0.0)

    def test_imaginary_axis_point(self):
        assert box_argument(ComplexBox.point(2j)) == Arc(math.pi / 2, math.pi / 2)

    def test_negative_real_axis_wraps(self):
        arc = box_argument(ComplexBox.from_bounds(-2, -1, -1, 1))
        assert arc.wrapped
        assert arc.lo == pytest.approx(math.pi - math.pi / 4)
        assert arc.hi == pytest.approx(-math.pi + math.pi / 4)
        assert arc.width == pytest.approx(math.pi / 2)

    def test_negative_real_point_is_pi(self):
        assert point_argument(-1.0, -0.0) == math.pi
        with pytest.raises(ValueError):
            point_argument(0.0, 0.0)

    def test_minimal_arc_picks_largest_gap(self):
        arc = minimal_arc([3.0, -3.0, 2.9])
        assert arc == Arc(2.9, -3.0)
        assert arc.contains(math.pi) and not arc.contains(0.0)

    @given(intervals(st.floats(-5, 5)), intervals(st.floats(-5, 5)))
    def test_contains_samples(self, re, im):
        z = ComplexBox(re, im)
        arc = box_argument(z)
        if arc is None:
            assert z.contains_origin()
            return
        u, v = dense_grid(z, 31)
        assert all(arc.contains(a, 1e-12) for a in np.arctan2(v, u))

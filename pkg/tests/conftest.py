import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from intervaldft import Interval, IntervalVector

settings.register_profile("default", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


@st.composite
def intervals(draw, elements=finite):
    a, b = draw(elements), draw(elements)
    return Interval(min(a, b), max(a, b))


@st.composite
def nested_intervals(draw, elements=finite):
    """A pair ``(inner, outer)`` with ``inner`` inside ``outer``."""
    outer = draw(intervals(elements))
    s, t = sorted(draw(st.floats(0.0, 1.0)) for _ in range(2))
    lo = outer.lo + s * (outer.hi - outer.lo)
    hi = outer.lo + t * (outer.hi - outer.lo)
    lo, hi = sorted(min(max(v, outer.lo), outer.hi) for v in (lo, hi))
    return Interval(lo, hi), outer


@st.composite
def signals(draw, min_size=1, max_size=8):
    n = draw(st.integers(min_size, max_size))
    return IntervalVector(draw(st.lists(intervals(st.floats(-10, 10)), min_size=n, max_size=n)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240101)


@pytest.fixture
def acceptance_log(request):
    """Record one summary line; all lines are printed after the run."""
    lines = request.config.__dict__.setdefault("_acceptance_lines", [])
    return lines.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.__dict__.get("_acceptance_lines")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

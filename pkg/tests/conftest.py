import math

import numpy as np
import pytest
from hypothesis import strategies as st

from convexsupport import FourierSupport, _kernels

ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    if call.when == "call":
        item.rep_call_passed = outcome.get_result().passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def astroid5():
    """p = 5 + sin 2 phi, parallel to an astroid."""
    return FourierSupport(5.0, ((2, 0.0, 1.0),))


@pytest.fixture
def deltoid8():
    """p = 8 + sin 3 phi, constant width; p + p'' touches 0."""
    return FourierSupport(8.0, ((3, 0.0, 1.0),))


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request):
    previous = _kernels.use(request.param)
    yield request.param
    _kernels.use(previous)


def random_series(rng, degree, scale=1.0, a0=None):
    """Arbitrary (not necessarily convex) series with all harmonics 1..degree."""
    coeffs = rng.uniform(-scale, scale, size=(degree, 2))
    return FourierSupport(rng.uniform(-2, 2) if a0 is None else a0,
                          tuple((n + 1, a, b) for n, (a, b) in enumerate(coeffs)))


# rounded so squared coefficients never underflow
finite = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False).map(lambda x: round(x, 6))


@st.composite
def series_strategy(draw, max_degree=8):
    degree = draw(st.integers(0, max_degree))
    a0 = draw(finite)
    harmonics = tuple((n, draw(finite), draw(finite)) for n in range(1, degree + 1))
    return FourierSupport(a0, harmonics)


def direct_eval(coeffs, phi, order=0):
    """Independent evaluation from an explicit {n: (a, b)} dict using numpy sin/cos derivatives."""
    phi = np.asarray(phi, dtype=float)
    total = np.zeros_like(phi)
    for n, (a, b) in coeffs.items():
        if n == 0:
            total = total + (a if order == 0 else 0.0)
            continue
        shift = order * math.pi / 2
        total = total + n ** order * (a * np.cos(n * phi + shift) + b * np.sin(n * phi + shift))
    return total

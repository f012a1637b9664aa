import math

import numpy as np
import pytest

from convexsupport import _kernels, _pykernels


def _coeffs(rng, degree, sparse=False):
    a = rng.normal(size=degree + 1)
    b = rng.normal(size=degree + 1)
    if sparse:
        mask = rng.random(degree + 1) < 0.7
        a[mask] = 0.0
        b[mask] = 0.0
    return a, b


def _reference(c0, a, b, phis):
    n = np.arange(len(a))[1:]
    ang = np.multiply.outer(phis, n)
    return c0 + np.cos(ang) @ a[1:] + np.sin(ang) @ b[1:]


@pytest.mark.parametrize("degree", [0, 1, 3, 31, 32, 33, 100])
def test_eval_series_matches_reference(backend, degree):
    rng = np.random.default_rng(degree)
    a, b = _coeffs(rng, degree)
    phis = rng.uniform(0, 2 * math.pi, 257)
    got = _kernels.eval_series(0.7, a, b, phis)
    np.testing.assert_allclose(got, _reference(0.7, a, b, phis), rtol=0, atol=1e-12 * (1 + degree))


def test_uniform_grid_equals_explicit_grid(backend):
    rng = np.random.default_rng(5)
    a, b = _coeffs(rng, 12, sparse=True)
    m = 1000
    explicit = _kernels.eval_series(-1.0, a, b, 2 * math.pi * np.arange(m) / m)
    np.testing.assert_allclose(_kernels.eval_series_uniform(-1.0, a, b, m), explicit, atol=1e-13)


def test_min_kernel_agrees_with_grid_argmin(backend):
    rng = np.random.default_rng(11)
    a, b = _coeffs(rng, 9)
    values = _kernels.eval_series_uniform(2.0, a, b, 4096)
    value, k = _kernels.min_series_uniform(2.0, a, b, 4096)
    assert k == int(np.argmin(values))
    assert value == pytest.approx(values.min(), abs=1e-14)


def test_backends_agree():
    if "compiled" not in _kernels.BACKENDS:
        pytest.skip("compiled kernels not built")
    compiled = _kernels.BACKENDS["compiled"]
    rng = np.random.default_rng(3)
    for degree in (2, 8, 64):
        a, b = _coeffs(rng, degree, sparse=True)
        phis = np.ascontiguousarray(rng.uniform(-10, 10, 500))
        np.testing.assert_allclose(compiled.eval_series(0.1, a, b, phis),
                                   _pykernels.eval_series(0.1, a, b, phis), atol=1e-12)


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        _kernels.use("fortran")

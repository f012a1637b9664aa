"""Select the series kernels at import: compiled if built, numpy otherwise.

Set CONVEXSUPPORT_BACKEND=python to force the numpy fallback.
"""
import os

import numpy as np

from . import _pykernels

try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _pykernels}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

BACKEND = "compiled" if _compiled is not None else "python"
if os.environ.get("CONVEXSUPPORT_BACKEND", "") == "python":
    BACKEND = "python"
_active = BACKENDS[BACKEND]


def use(name):
    """Switch the active backend (``"compiled"`` or ``"python"``); returns the previous name."""
    global BACKEND, _active
    if name not in BACKENDS:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}; have {sorted(BACKENDS)}")
    previous, BACKEND, _active = BACKEND, name, BACKENDS[name]
    return previous


def _dense(x):
    return np.ascontiguousarray(x, dtype=np.float64)


def eval_series(c0, ca, cb, phis):
    return _active.eval_series(float(c0), _dense(ca), _dense(cb), _dense(phis))


def eval_series_uniform(c0, ca, cb, m):
    return _active.eval_series_uniform(float(c0), _dense(ca), _dense(cb), int(m))


def min_series_uniform(c0, ca, cb, m):
    value, k = _active.min_series_uniform(float(c0), _dense(ca), _dense(cb), int(m))
    return float(value), int(k)

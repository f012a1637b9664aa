"""Numpy implementation of the series kernels, used when the compiled module is unavailable.

Same contract as ``_ckernels``: dense coefficient arrays, index 0 ignored.
"""
import numpy as np

# rows per block keep the (angles x harmonics) matrix small
_BLOCK = 8192


def eval_series(c0, ca, cb, phis):
    phis = np.ascontiguousarray(phis, dtype=np.float64)
    ca = np.asarray(ca, dtype=np.float64)
    cb = np.asarray(cb, dtype=np.float64)
    out = np.full(phis.shape[0], float(c0))
    n = np.flatnonzero((ca != 0.0) | (cb != 0.0))
    n = n[n > 0]
    if n.size == 0:
        return out
    an, bn = ca[n], cb[n]
    for start in range(0, phis.shape[0], _BLOCK):
        ang = np.multiply.outer(phis[start:start + _BLOCK], n)
        out[start:start + _BLOCK] += np.cos(ang) @ an + np.sin(ang) @ bn
    return out


def eval_series_uniform(c0, ca, cb, m):
    return eval_series(c0, ca, cb, 2.0 * np.pi * np.arange(m) / m)


def min_series_uniform(c0, ca, cb, m):
    values = eval_series_uniform(c0, ca, cb, m)
    k = int(np.argmin(values))
    return float(values[k]), k

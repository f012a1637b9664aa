"""Truncated Fourier series of a (generalized) support function.

A curve is stored as ``p(phi) = a0 + sum_n a_n cos(n phi) + b_n sin(n phi)``
over finitely many harmonics.  Nothing here requires ``p`` to be positive or
convex; convexity is a separate predicate (``p + p'' > 0``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from . import _kernels
from .errors import InvalidArgumentError

TWO_PI = 2.0 * math.pi
DEFAULT_CONVEXITY_TOL = 1e-9


class PlanePoint(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class FourierSupport:
    """Immutable support-function series.

    ``harmonics`` holds ``(n, a_n, b_n)`` triples.  On construction they are
    validated, sorted by ``n`` and stripped of all-zero entries, so two equal
    series compare equal.
    """

    a0: float
    harmonics: tuple[tuple[int, float, float], ...] = field(default=())

    def __post_init__(self):
        a0 = float(self.a0)
        if not math.isfinite(a0):
            raise InvalidArgumentError(f"a0 must be finite, got {a0!r}")
        seen = set()
        clean = []
        for entry in self.harmonics:
            n, a, b = entry
            if isinstance(n, float) and n.is_integer():
                n = int(n)
            if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
                raise InvalidArgumentError(f"harmonic index must be an integer >= 1, got {n!r}")
            n = int(n)
            if n in seen:
                raise InvalidArgumentError(f"duplicate harmonic n={n}")
            seen.add(n)
            a, b = float(a), float(b)
            if not (math.isfinite(a) and math.isfinite(b)):
                raise InvalidArgumentError(f"harmonic n={n} has non-finite coefficients")
            if a != 0.0 or b != 0.0:
                clean.append((n, a, b))
        clean.sort()
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "harmonics", tuple(clean))

    @classmethod
    def constant(cls, value: float) -> FourierSupport:
        return cls(value)

    @classmethod
    def from_dense(cls, a0, a, b) -> FourierSupport:
        """Build from dense arrays where ``a[n], b[n]`` are the n-th coefficients (index 0 ignored)."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        return cls(a0, tuple((n, a[n], b[n]) for n in range(1, len(a))))

    @property
    def degree(self) -> int:
        return self.harmonics[-1][0] if self.harmonics else 0

    def coeff(self, n: int) -> tuple[float, float]:
        """``(a_n, b_n)``; ``(a0, 0)`` for ``n == 0``."""
        if n == 0:
            return self.a0, 0.0
        for m, a, b in self.harmonics:
            if m == n:
                return a, b
        return 0.0, 0.0

    @cached_property
    def dense(self) -> tuple[np.ndarray, np.ndarray]:
        a = np.zeros(self.degree + 1)
        b = np.zeros(self.degree + 1)
        for n, an, bn in self.harmonics:
            a[n], b[n] = an, bn
        return a, b

    def map_harmonics(self, a0: float, fn) -> FourierSupport:
        """New series with constant ``a0`` and each ``(n, a, b)`` replaced by ``(n, *fn(n, a, b))``."""
        return FourierSupport(a0, tuple((n, *fn(n, a, b)) for n, a, b in self.harmonics))

    def __str__(self):
        terms = [f"{self.a0:g}"]
        for n, a, b in self.harmonics:
            if a:
                terms.append(f"{a:+g} cos {n}phi")
            if b:
                terms.append(f"{b:+g} sin {n}phi")
        return " ".join(terms)


def _derivative_pair(n: int, a: float, b: float, order: int) -> tuple[float, float]:
    # d/dphi: (a cos + b sin) -> (n b cos - n a sin)
    for _ in range(order):
        a, b = n * b, -n * a
    return a, b


def derivative_series(p: FourierSupport, order: int) -> FourierSupport:
    """The ``order``-th derivative of ``p`` as another series (any order >= 0)."""
    if order < 0:
        raise InvalidArgumentError(f"derivative order must be >= 0, got {order}")
    return p.map_harmonics(p.a0 if order == 0 else 0.0, lambda n, a, b: _derivative_pair(n, a, b, order))


def curvature_series(p: FourierSupport) -> FourierSupport:
    """``p + p''`` as a series: harmonic n is weighted by ``1 - n^2`` (so n=1 drops out)."""
    return p.map_harmonics(p.a0, lambda n, a, b: ((1 - n * n) * a, (1 - n * n) * b))


def _eval_scalar(p: FourierSupport, phi: float) -> float:
    total = p.a0
    for n, a, b in p.harmonics:
        total += a * math.cos(n * phi) + b * math.sin(n * phi)
    return total


def evaluate_series(p: FourierSupport, phi):
    """Evaluate ``p`` at a scalar angle or an array of angles (no derivative)."""
    if np.ndim(phi) == 0:
        return _eval_scalar(p, math.fmod(float(phi), TWO_PI))
    phis = np.mod(np.asarray(phi, dtype=float), TWO_PI)
    a, b = p.dense
    return _kernels.eval_series(p.a0, a, b, phis.ravel()).reshape(phis.shape)


def evaluate(p: FourierSupport, phi, order: int = 0):
    """Order-th derivative of ``p`` at ``phi`` (radians, scalar or array); order in 0..3."""
    if order not in (0, 1, 2, 3):
        raise InvalidArgumentError(f"order must be one of 0, 1, 2, 3; got {order!r}")
    return evaluate_series(derivative_series(p, order), phi)


def sample_uniform(p: FourierSupport, m: int) -> np.ndarray:
    """Values of ``p`` on the grid ``2 pi k / m``, k = 0..m-1."""
    a, b = p.dense
    return _kernels.eval_series_uniform(p.a0, a, b, m)


def radius_of_curvature(p: FourierSupport, phi):
    """Signed ``p + p''``; its absolute value is the radius of curvature."""
    return evaluate_series(curvature_series(p), phi)


class CurvatureMinimum(NamedTuple):
    value: float
    argmin_phi: float


def _refine_minimum(g: FourierSupport, dg: FourierSupport, d2g: FourierSupport,
                    phi: float, half_width: float) -> float:
    """Safeguarded Newton on ``g'`` inside ``[phi - h, phi + h]``; returns the refined angle."""
    lo, hi = phi - half_width, phi + half_width
    glo, ghi = _eval_scalar(dg, lo), _eval_scalar(dg, hi)
    bracketed = glo <= 0.0 <= ghi
    x = phi
    for _ in range(60):
        slope = _eval_scalar(dg, x)
        curv = _eval_scalar(d2g, x)
        if bracketed:
            if slope < 0.0:
                lo = x
            else:
                hi = x
        step = slope / curv if curv > 0.0 else None
        if step is not None and lo <= x - step <= hi:
            x_new = x - step
        elif bracketed:
            x_new = 0.5 * (lo + hi)
        else:
            break
        if abs(x_new - x) <= 1e-15 * max(1.0, abs(x)):
            x = x_new
            break
        x = x_new
    return x


def min_curvature_radius(p: FourierSupport) -> CurvatureMinimum:
    """Global minimum of ``p + p''`` over the circle.

    Dense uniform grid (``max(4096, 64 N)`` points) followed by Newton
    refinement of the lowest discrete local minima.
    """
    g = curvature_series(p)
    if not g.harmonics:
        return CurvatureMinimum(g.a0, 0.0)
    m = max(4096, 64 * g.degree)
    values = sample_uniform(g, m)
    step = TWO_PI / m
    is_local = (values <= np.roll(values, 1)) & (values <= np.roll(values, -1))
    candidates = np.flatnonzero(is_local)
    candidates = candidates[np.argsort(values[candidates], kind="stable")][:4]
    best_k = int(np.argmin(values))
    best_value, best_phi = float(values[best_k]), best_k * step
    dg, d2g = derivative_series(g, 1), derivative_series(g, 2)
    for k in candidates:
        phi = _refine_minimum(g, dg, d2g, k * step, step)
        value = _eval_scalar(g, phi)
        if value < best_value:
            best_value, best_phi = value, phi
    return CurvatureMinimum(best_value, best_phi % TWO_PI)


def is_convex(p: FourierSupport, tol: float = DEFAULT_CONVEXITY_TOL) -> bool:
    """True when ``min(p + p'') > tol``; pass a small negative tol to admit cusp-touching curves."""
    return min_curvature_radius(p).value > tol


def steiner_point(p: FourierSupport) -> PlanePoint:
    a1, b1 = p.coeff(1)
    return PlanePoint(a1, b1)


def translate(p: FourierSupport, a: float, b: float) -> FourierSupport:
    """Support function of the same body seen from an origin moved to ``(a, b)``."""
    a1, b1 = p.coeff(1)
    rest = tuple(h for h in p.harmonics if h[0] != 1)
    return FourierSupport(p.a0, ((1, a1 - a, b1 - b),) + rest)


def recenter_to_steiner(p: FourierSupport) -> FourierSupport:
    return FourierSupport(p.a0, tuple(h for h in p.harmonics if h[0] != 1))


def width(p: FourierSupport, phi):
    """Width in direction ``phi``: ``p(phi) + p(phi + pi)``."""
    return evaluate_series(p, phi) + evaluate_series(p, np.add(phi, math.pi))


def is_constant_width(p: FourierSupport, tol: float = 0.0) -> bool:
    return all(max(abs(a), abs(b)) <= tol for n, a, b in p.harmonics if n % 2 == 0)


def random_convex(degree: int, seed: int, min_radius: float = 0.05, *,
                  odd_only: bool = False) -> FourierSupport:
    """Seeded random convex support function with ``a0 = 1`` and no n=1 term.

    Harmonics n = 2..degree get coefficients uniform in ``[-1, 1] * n**-3``
    (even ones zeroed when ``odd_only``); the harmonic part is then scaled by
    the largest ``lam <= 1`` keeping ``min(p + p'') >= min_radius``.
    """
    if degree < 0:
        raise InvalidArgumentError(f"degree must be >= 0, got {degree}")
    rng = np.random.default_rng(seed)
    ns = np.arange(2, degree + 1)
    coeffs = rng.uniform(-1.0, 1.0, size=(ns.size, 2)) * (ns.astype(float) ** -3)[:, None]
    if odd_only:
        coeffs[ns % 2 == 0] = 0.0
    shape = FourierSupport(0.0, tuple((int(n), a, b) for n, (a, b) in zip(ns, coeffs)))
    if not shape.harmonics or min_radius >= 1.0:
        return FourierSupport(1.0)

    # grid minimum of 1 + lam * h is 1 + lam * min(h) for lam >= 0
    h = curvature_series(shape)
    h_min = float(np.min(sample_uniform(h, max(4096, 64 * h.degree))))

    def grid_min(lam):
        return 1.0 + lam * h_min

    if grid_min(1.0) >= min_radius:
        lam = 1.0
    else:
        lo, hi = 0.0, 1.0
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if grid_min(mid) >= min_radius:
                lo = mid
            else:
                hi = mid
        lam = lo

    def build(lam):
        return shape.map_harmonics(1.0, lambda n, a, b: (lam * a, lam * b))

    p = build(lam)
    true_min = min_curvature_radius(p).value
    if true_min < min_radius and lam > 0.0:
        # refined minimum sits below the grid one; rescale using linearity in lam
        lam *= (1.0 - min_radius) / (1.0 - true_min) * (1.0 - 1e-12)
        p = build(lam)
    return p


def from_samples(values: Iterable[float], degree: int) -> FourierSupport:
    """Discrete Fourier analysis of samples taken at ``phi_k = 2 pi k / M``."""
    values = np.asarray(values, dtype=float).ravel()
    m = values.size
    if degree < 0:
        raise InvalidArgumentError(f"degree must be >= 0, got {degree}")
    if m < 2 * degree + 1:
        raise InvalidArgumentError(f"need at least {2 * degree + 1} samples for degree {degree}, got {m}")
    if not np.all(np.isfinite(values)):
        raise InvalidArgumentError("samples must be finite")
    c = np.fft.rfft(values) / m
    return FourierSupport(
        c[0].real,
        tuple((n, 2.0 * c[n].real, -2.0 * c[n].imag) for n in range(1, degree + 1)),
    )

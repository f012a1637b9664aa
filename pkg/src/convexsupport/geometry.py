"""Point sets and derived curves of a support function.

Boundary (envelope), pedal, evolute and parallel curves; the astroid and
three-cusped hypocycloid as explicit parametrizations; phase normal forms
for single-harmonic curves; and detection of similarities between curves.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .series import (
    TWO_PI,
    FourierSupport,
    PlanePoint,
    curvature_series,
    evaluate,
    sample_uniform,
)

# (cos(n pi/2), sin(n pi/2)) by n mod 4, exact
_QUARTER_TURN = ((1, 0), (0, 1), (-1, 0), (0, -1))
SIMILARITY_SAMPLES = 1024


def boundary_point(p: FourierSupport, phi: float) -> PlanePoint:
    """Envelope point ``(p cos - p' sin, p sin + p' cos)`` at normal angle ``phi``."""
    v, dv = evaluate(p, phi, 0), evaluate(p, phi, 1)
    c, s = math.cos(phi), math.sin(phi)
    return PlanePoint(v * c - dv * s, v * s + dv * c)


def boundary_points(p: FourierSupport, phis) -> np.ndarray:
    """Vectorized :func:`boundary_point`; returns an ``(M, 2)`` array."""
    phis = np.asarray(phis, dtype=float)
    v, dv = evaluate(p, phis, 0), evaluate(p, phis, 1)
    c, s = np.cos(phis), np.sin(phis)
    return np.stack([v * c - dv * s, v * s + dv * c], axis=-1)


def pedal_point(p: FourierSupport, phi: float) -> PlanePoint:
    v = evaluate(p, phi, 0)
    return PlanePoint(v * math.cos(phi), v * math.sin(phi))


def pedal_points(p: FourierSupport, phis) -> np.ndarray:
    phis = np.asarray(phis, dtype=float)
    v = evaluate(p, phis, 0)
    return np.stack([v * np.cos(phis), v * np.sin(phis)], axis=-1)


def evolute_support(p: FourierSupport) -> FourierSupport:
    """Generalized support of the evolute, ``-p'(phi + pi/2)``, computed per harmonic."""

    def shift(n, a, b):
        c, s = _QUARTER_TURN[n % 4]
        return n * (a * s - b * c), n * (a * c + b * s)

    return p.map_harmonics(0.0, shift)


def parallel_support(p: FourierSupport, r: float) -> FourierSupport:
    """Inner parallel curve at distance ``r`` (outer for negative ``r``)."""
    return FourierSupport(p.a0 - r, p.harmonics)


def rotate(p: FourierSupport, theta: float) -> FourierSupport:
    """Support of the curve rotated by ``theta``: ``q(phi) = p(phi - theta)``."""

    def turn(n, a, b):
        c, s = math.cos(n * theta), math.sin(n * theta)
        return a * c - b * s, a * s + b * c

    return p.map_harmonics(p.a0, turn)


def scale(p: FourierSupport, lam: float) -> FourierSupport:
    return p.map_harmonics(lam * p.a0, lambda n, a, b: (lam * a, lam * b))


def astroid_support(a: float) -> FourierSupport:
    return FourierSupport(0.0, ((2, 0.0, a),))


def astroid_param_point(a: float, phi: float) -> PlanePoint:
    return PlanePoint(2 * a * math.sin(phi) ** 3, 2 * a * math.cos(phi) ** 3)


def hypocycloid3_support(a: float) -> FourierSupport:
    return FourierSupport(0.0, ((3, a, 0.0),))


def hypocycloid3_param_point(a: float, t: float) -> PlanePoint:
    """Three-cusped hypocycloid; normal angle ``phi`` corresponds to ``t = pi - 2 phi``."""
    return PlanePoint(-2 * a * math.cos(t) - a * math.cos(2 * t),
                      -2 * a * math.sin(t) + a * math.sin(2 * t))


@dataclass(frozen=True)
class CanonicalPhase:
    """Phase normal form of ``a0 + a_n cos n phi + b_n sin n phi`` for n in {2, 3}.

    n = 2: ``p = a0 + amplitude * sin(2u)`` with ``u = phi - phi0 + pi/4``, ``phi0`` in [0, pi).
    n = 3: ``p = a0 + amplitude * cos(3u)`` with ``u = phi - phi0``, ``phi0`` in [0, 2 pi/3).
    """

    a0: float
    amplitude: float
    phi0: float
    harmonic: int

    def normal_form(self) -> FourierSupport:
        if self.harmonic == 2:
            return FourierSupport(self.a0, ((2, 0.0, self.amplitude),))
        return FourierSupport(self.a0, ((3, self.amplitude, 0.0),))

    @property
    def shift(self) -> float:
        """Rotation taking the normal form to the original curve."""
        return self.phi0 - math.pi / 4 if self.harmonic == 2 else self.phi0

    def reconstruct(self) -> FourierSupport:
        return rotate(self.normal_form(), self.shift)


def canonical_phase(p: FourierSupport) -> CanonicalPhase:
    if len(p.harmonics) != 1 or p.harmonics[0][0] not in (2, 3):
        raise InvalidArgumentError(
            "canonical_phase needs exactly one harmonic besides a0, of index 2 or 3; "
            f"got harmonics {[h[0] for h in p.harmonics]}"
        )
    n, a, b = p.harmonics[0]
    amplitude = math.hypot(a, b)
    # positive branch: (a, b) = amplitude * (cos n phi0, sin n phi0)
    phi0 = (math.atan2(b, a) % TWO_PI) / n
    if phi0 >= TWO_PI / n:
        phi0 = 0.0
    return CanonicalPhase(p.a0, amplitude, phi0, n)


@dataclass(frozen=True)
class SimilarityReport:
    """Best similarity (rotation then homothety) mapping ``source`` onto ``target``.

    When ``degenerate`` is set, ``ratio`` and ``rotation`` are meaningless.
    """

    ratio: float
    rotation: float
    max_deviation: float
    degenerate: bool


def _norm2(p: FourierSupport) -> float:
    return 2.0 * p.a0 ** 2 + sum(a * a + b * b for _, a, b in p.harmonics)


def _inner(p: FourierSupport, q: FourierSupport) -> float:
    total = 2.0 * p.a0 * q.a0
    for n, a, b in p.harmonics:
        qa, qb = q.coeff(n)
        total += a * qa + b * qb
    return total


def _rotate_points(points: np.ndarray, theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return points @ np.array([[c, s], [-s, c]])


def _deviation(target, source, lam, theta, phis, target_pts) -> float:
    moved = _rotate_points(boundary_points(scale(source, lam), phis - theta), theta)
    return float(np.max(np.hypot(*(target_pts - moved).T)))


def similarity_between(target: FourierSupport, source: FourierSupport,
                       samples: int = SIMILARITY_SAMPLES) -> SimilarityReport:
    """Find ``ratio`` and ``rotation`` so that rotating and scaling ``source`` best matches ``target``.

    The deviation is the sup over ``samples`` normal angles of the distance
    between corresponding boundary points.  Candidate rotations come from
    the phase equation of the dominant shared harmonic, ``n theta = arg(t_n / s_n)``;
    for each, the ratio is the least-squares optimum in coefficient space.
    """
    phis = TWO_PI * np.arange(samples) / samples
    target_pts = boundary_points(target, phis)
    if _norm2(target) == 0.0 or _norm2(source) == 0.0:
        return SimilarityReport(0.0, 0.0, float(np.max(np.hypot(*target_pts.T))), True)

    best_n, best_weight, phase = 0, 0.0, 0.0
    for n, a, b in source.harmonics:
        ta, tb = target.coeff(n)
        weight = math.hypot(a, b) * math.hypot(ta, tb)
        if weight > best_weight:
            best_n, best_weight = n, weight
            phase = math.atan2(tb, ta) - math.atan2(b, a)
    if best_n == 0:
        thetas = [0.0]
    else:
        thetas = sorted(((phase + TWO_PI * k) / best_n) % TWO_PI for k in range(best_n))

    results = []
    for theta in thetas:
        turned = rotate(source, theta)
        lam = max(0.0, _inner(target, turned) / _norm2(turned))
        results.append((theta, lam, _deviation(target, source, lam, theta, phis, target_pts)))
    floor = min(dev for _, _, dev in results)
    scale_ref = 1.0 + float(np.max(np.hypot(*target_pts.T)))
    theta, lam, dev = next(r for r in results if r[2] <= floor + 1e-12 * scale_ref)
    return SimilarityReport(lam, theta, dev, False)


def traced_twice(p: FourierSupport) -> bool:
    """True when ``p(phi + pi) = -p(phi)``, so the envelope is traversed twice over one turn."""
    return p.a0 == 0.0 and bool(p.harmonics) and all(n % 2 == 1 for n, _, _ in p.harmonics)


def cusp_count(p: FourierSupport, samples: int = 4096) -> int:
    """Number of cusps of the envelope: sign changes of ``p + p''`` around the circle."""
    g = sample_uniform(curvature_series(p), samples)
    signs = np.sign(g)
    signs = signs[signs != 0]
    if signs.size == 0:
        return 0
    changes = int(np.count_nonzero(signs != np.roll(signs, 1)))
    return changes // 2 if traced_twice(p) else changes

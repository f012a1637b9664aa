"""Isoperimetric-deficit bounds, equality classification and randomized sweeps."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import functionals as fn
from .errors import ConvexityError, InvalidArgumentError
from .series import (
    FourierSupport,
    is_constant_width,
    min_curvature_radius,
    random_convex,
    recenter_to_steiner,
)

PI = math.pi
DEFAULT_TOL = 1e-9
DEGENERATE_CONVEXITY_TOL = -1e-9


class EqualityKind(str, enum.Enum):
    CIRCLE = "circle"
    ASTROID_PARALLEL = "astroid_parallel"
    HYPOCYCLOID3_PARALLEL = "hypocycloid3_parallel"
    GENERIC = "generic"


@dataclass(frozen=True)
class EqualityClass:
    kind: EqualityKind
    residual: float


def _energy_fractions(p: FourierSupport) -> tuple[float, dict[int, float]]:
    # Parseval weights: the constant term carries 2 a0^2, harmonic n carries a_n^2 + b_n^2
    per_n = {n: a * a + b * b for n, a, b in p.harmonics}
    total = 2.0 * p.a0 ** 2 + math.fsum(per_n.values())
    return total, per_n


def classify_equality(p: FourierSupport, tol: float = DEFAULT_TOL) -> EqualityClass:
    """Which equality family ``p`` belongs to, judged by relative spectral energy.

    The residual is the energy fraction outside the class's harmonics; for a
    generic curve it is the distance to the nearer of the two cusped families.
    """
    q = recenter_to_steiner(p)
    total, per_n = _energy_fractions(q)
    if total == 0.0:
        return EqualityClass(EqualityKind.CIRCLE, 0.0)

    def outside(keep):
        return math.fsum(e for n, e in per_n.items() if n not in keep) / total

    off_circle = outside(())
    if off_circle <= tol:
        return EqualityClass(EqualityKind.CIRCLE, off_circle)
    off2, off3 = outside((2,)), outside((3,))
    if off2 <= tol and per_n.get(2, 0.0) / total > tol:
        return EqualityClass(EqualityKind.ASTROID_PARALLEL, off2)
    if off3 <= tol and per_n.get(3, 0.0) / total > tol:
        return EqualityClass(EqualityKind.HYPOCYCLOID3_PARALLEL, off3)
    return EqualityClass(EqualityKind.GENERIC, min(off2, off3))


@dataclass(frozen=True)
class DeficitReport:
    """Functionals, deficit bounds and their slacks for one convex curve.

    ``A`` is the pedal area about the Steiner point.  Bounds are keyed by name:
    ``lower_general`` 3 pi (A - F), ``lower_groemer`` 6 pi delta2^2,
    ``upper_hurwitz`` pi |F_e|, ``evolute_third`` |F_e| / 3 (an upper bound for
    A - F) and, for constant width, ``lower_cw`` 32 pi (A - F) / 9 and
    ``lower_groemer_cw`` 16 pi delta2^2.  Every slack is larger side minus
    smaller side, so it is non-negative whenever the inequality holds.
    """

    L: float
    F: float
    A: float
    F_e: float
    delta: float
    delta2_sq: float
    constant_width: bool
    bounds: dict[str, float]
    slacks: dict[str, float]
    classification: EqualityClass
    min_curvature: float = field(default=math.nan)

    @property
    def pedal_excess(self) -> float:
        return self.A - self.F


def analyze(p: FourierSupport, tol: float = DEFAULT_TOL,
            convexity_tol: float = DEGENERATE_CONVEXITY_TOL) -> DeficitReport:
    """Compute every functional and bound for a convex curve.

    The curve is recentered to its Steiner point first.  Bounds are summed
    from the spectral weights directly, so each equality case is exact to
    the last bit rather than up to the rounding of ``A - F``.
    """
    curvature = min_curvature_radius(p)
    if not curvature.value > convexity_tol:
        raise ConvexityError(curvature.value, curvature.argmin_phi, convexity_tol)
    q = recenter_to_steiner(p)
    ns, e = fn.harmonic_energies(q, 2)

    def spectral(weights, unit=PI ** 2):
        return unit * math.fsum(np.asarray(weights, dtype=float) * e)

    n2 = ns * ns
    delta = fn.isoperimetric_deficit(q)
    excess = spectral(n2 / 2.0, PI)
    bounds = {
        "lower_general": spectral(3.0 * n2 / 2.0),
        "lower_groemer": spectral(np.full_like(ns, 6.0)),
        "upper_hurwitz": spectral(n2 * (n2 - 1.0) / 2.0),
        "evolute_third": spectral(n2 * (n2 - 1.0) / 6.0, PI),
    }
    slacks = {
        "isoperimetric": delta,
        "pedal_dominance": excess,
        "lower_general": delta - bounds["lower_general"],
        "general_vs_groemer": bounds["lower_general"] - bounds["lower_groemer"],
        "lower_groemer": delta - bounds["lower_groemer"],
        "upper_hurwitz": bounds["upper_hurwitz"] - delta,
        "evolute_third": bounds["evolute_third"] - excess,
    }
    constant_width = is_constant_width(q, tol)
    if constant_width:
        bounds["lower_cw"] = spectral(16.0 * n2 / 9.0)
        bounds["lower_groemer_cw"] = spectral(np.full_like(ns, 16.0))
        slacks["lower_cw"] = delta - bounds["lower_cw"]
        slacks["cw_vs_groemer_cw"] = bounds["lower_cw"] - bounds["lower_groemer_cw"]
        slacks["lower_groemer_cw"] = delta - bounds["lower_groemer_cw"]
    return DeficitReport(
        L=fn.length(q),
        F=fn.signed_area(q),
        A=fn.pedal_area(q),
        F_e=fn.evolute_area(q),
        delta=delta,
        delta2_sq=fn.delta2_squared(q),
        constant_width=constant_width,
        bounds=bounds,
        slacks=slacks,
        classification=classify_equality(q, tol),
        min_curvature=curvature.value,
    )


@dataclass(frozen=True)
class Violation:
    seed: int
    bound: str
    slack: float


@dataclass(frozen=True)
class SweepSummary:
    count: int
    violations: list[Violation]
    min_slack_per_bound: dict[str, float]
    tightest_seed: int | None
    tightest_curve: FourierSupport | None
    tightest_ratio: float

    @property
    def passed(self) -> bool:
        return not self.violations


def curve_seeds(seed: int, count: int) -> list[int]:
    """Independent per-curve seeds derived from one sweep seed."""
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(count, dtype=np.uint32)]


def sweep(count: int, degree: int, seed: int, min_radius: float = 0.05,
          constant_width_only: bool = False, tol: float = DEFAULT_TOL) -> SweepSummary:
    """Analyze ``count`` seeded random convex curves and collect bound violations.

    A bound is violated when its slack is below ``-tol * max(1, |delta|)``.
    The tightest witness is the non-circular curve with the smallest
    relative slack ``(delta - 3 pi (A - F)) / delta`` of the general bound.
    """
    if count < 1:
        raise InvalidArgumentError(f"count must be >= 1, got {count}")
    violations = []
    min_slack: dict[str, float] = {}
    tightest = (math.inf, None, None)
    for curve_seed in curve_seeds(seed, count):
        p = random_convex(degree, curve_seed, min_radius, odd_only=constant_width_only)
        report = analyze(p, tol)
        floor = -tol * max(1.0, abs(report.delta))
        for name, value in report.slacks.items():
            if value < floor:
                violations.append(Violation(curve_seed, name, value))
            min_slack[name] = min(value, min_slack.get(name, math.inf))
        if report.delta > 0.0:
            ratio = report.slacks["lower_general"] / report.delta
            if ratio < tightest[0]:
                tightest = (ratio, curve_seed, p)
    violations.sort(key=lambda v: (v.seed, v.bound))
    return SweepSummary(count, violations, min_slack, tightest[1], tightest[2],
                        tightest[0] if tightest[1] is not None else math.nan)


class CellStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped_nonconvex"


@dataclass(frozen=True)
class CellResult:
    a0: float
    a: float
    b: float
    status: CellStatus
    residual: float


def equality_grid_check(n: int, grid, tol: float = 1e-10) -> list[CellResult]:
    """Check the sharp equality on curves ``a0 + a cos n phi + b sin n phi``.

    n = 2 tests ``delta = 3 pi (A - F)``; n = 3 tests ``delta = 32 pi (A - F) / 9``
    together with constant width.  Non-convex cells are skipped.
    """
    if n not in (2, 3):
        raise InvalidArgumentError(f"n must be 2 or 3, got {n}")
    results = []
    for a0, a, b in grid:
        p = FourierSupport(a0, ((n, a, b),))
        if not min_curvature_radius(p).value > DEGENERATE_CONVEXITY_TOL:
            results.append(CellResult(a0, a, b, CellStatus.SKIPPED, math.nan))
            continue
        report = analyze(p)
        excess = report.A - report.F
        if n == 2:
            residual = abs(report.delta - 3.0 * PI * excess)
            ok = residual <= tol * report.delta
        else:
            residual = abs(report.delta - 32.0 * PI * excess / 9.0)
            ok = residual <= tol * report.delta and report.constant_width
        results.append(CellResult(a0, a, b, CellStatus.PASS if ok else CellStatus.FAIL, residual))
    return results

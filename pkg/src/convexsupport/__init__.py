"""Convex plane curves as Fourier series of their support function.

Geometric functionals (length, area, pedal and evolute areas, Steiner point,
isoperimetric deficit), the deficit inequality chain with its equality
cases, pedal/evolute/parallel constructions and SVG rendering.
"""
from ._kernels import BACKEND
from .errors import ConvexityError, CurveParseError, InvalidArgumentError
from .functionals import (
    deficit_via_parallel,
    delta2_squared,
    evolute_area,
    integrate_periodic,
    isoperimetric_deficit,
    length,
    parallel_area,
    pedal_area,
    signed_area,
)
from .geometry import (
    CanonicalPhase,
    SimilarityReport,
    astroid_param_point,
    astroid_support,
    boundary_point,
    boundary_points,
    canonical_phase,
    cusp_count,
    evolute_support,
    hypocycloid3_param_point,
    hypocycloid3_support,
    parallel_support,
    pedal_point,
    pedal_points,
    rotate,
    scale,
    similarity_between,
)
from .inequalities import (
    DeficitReport,
    EqualityClass,
    EqualityKind,
    SweepSummary,
    analyze,
    classify_equality,
    equality_grid_check,
    sweep,
)
from .series import (
    FourierSupport,
    PlanePoint,
    evaluate,
    from_samples,
    is_constant_width,
    is_convex,
    min_curvature_radius,
    radius_of_curvature,
    random_convex,
    recenter_to_steiner,
    steiner_point,
    translate,
    width,
)

__version__ = "0.1.0"

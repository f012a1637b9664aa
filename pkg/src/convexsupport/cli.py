"""Command-line entry point.

Exit codes: 0 success, 2 curve parse error, 3 convexity failure,
4 inequality violation found by ``sweep``, 5 invalid arguments.
"""
from __future__ import annotations

import argparse
import math
import sys

from .curvefile import read_curve, serialize_curve
from .errors import ConvexityError, CurveParseError, InvalidArgumentError
from .geometry import canonical_phase
from .inequalities import DEFAULT_TOL, DEGENERATE_CONVEXITY_TOL, analyze, sweep
from .render import LAYERS, RenderSpec, render_svg
from .report import report_json, report_text
from .series import (
    DEFAULT_CONVEXITY_TOL,
    is_constant_width,
    min_curvature_radius,
    recenter_to_steiner,
    steiner_point,
)

EXIT_OK, EXIT_PARSE, EXIT_CONVEXITY, EXIT_VIOLATION, EXIT_USAGE = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _convexity_tol(args) -> float:
    return DEGENERATE_CONVEXITY_TOL if args.allow_degenerate else DEFAULT_CONVEXITY_TOL


def _load(path):
    try:
        return read_curve(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_check(args) -> int:
    p = _load(args.file)
    tol = _convexity_tol(args)
    low = min_curvature_radius(p)
    s = steiner_point(p)
    print(f"degree            {p.degree}")
    print(f"min p+p''         {low.value:.17g} at phi = {low.argmin_phi:.17g}")
    print(f"steiner point     ({s.x:.17g}, {s.y:.17g})")
    print(f"constant width    {'yes' if is_constant_width(p, DEFAULT_TOL) else 'no'}")
    if not low.value > tol:
        print(f"error: not convex (min p+p'' = {low.value:.6g} <= {tol:g})", file=sys.stderr)
        return EXIT_CONVEXITY
    print("convex            yes")
    return EXIT_OK


def cmd_report(args) -> int:
    p = _load(args.file)
    report = analyze(p, convexity_tol=_convexity_tol(args))
    sys.stdout.write(report_json(report) if args.json else report_text(report))
    return EXIT_OK


def _layers(values) -> tuple[str, ...]:
    layers = tuple(item for value in values for item in value.split(",") if item)
    unknown = [layer for layer in layers if layer not in LAYERS]
    if unknown or not layers:
        raise UsageError(f"--layers takes names from {', '.join(LAYERS)}")
    return layers


def _parallel(value):
    if value.lower() in ("l/2pi", "l/2π"):
        return "L/2pi"
    try:
        r = float(value)
    except ValueError:
        raise UsageError(f"--parallel takes a number or L/2pi, got {value!r}") from None
    if not math.isfinite(r):
        raise UsageError("--parallel must be finite")
    return r


def cmd_render(args) -> int:
    p = _load(args.file)
    try:
        spec = RenderSpec(layers=_layers(args.layers), parallel_distance=_parallel(args.parallel),
                          samples_per_curve=args.samples)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from exc
    svg = render_svg(p, spec)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror}") from exc
    print(f"wrote {args.out} ({len(spec.layers)} layers)")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.count < 1 or args.degree < 0 or args.min_radius <= 0 or args.tol < 0:
        raise UsageError("sweep needs --count >= 1, --degree >= 0, --min-radius > 0, --tol >= 0")
    summary = sweep(args.count, args.degree, args.seed, args.min_radius,
                    constant_width_only=args.constant_width, tol=args.tol)
    mins = " ".join(f"{k}={v:.3g}" for k, v in summary.min_slack_per_bound.items())
    print(f"sweep count={summary.count} violations={len(summary.violations)} min_slack: {mins}")
    if summary.tightest_seed is not None:
        print(f"tightest general bound: seed {summary.tightest_seed}, relative slack {summary.tightest_ratio:.6g}")
        print(serialize_curve(summary.tightest_curve, [f"seed {summary.tightest_seed}"]), end="")
    for v in summary.violations:
        print(f"violation: seed {v.seed} bound {v.bound} slack {v.slack:.17g}", file=sys.stderr)
    return EXIT_OK if summary.passed else EXIT_VIOLATION


def cmd_canon(args) -> int:
    p = _load(args.file)
    s = steiner_point(p)
    try:
        phase = canonical_phase(recenter_to_steiner(p))
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from exc
    form = "a0 + amplitude sin 2(phi - phi0 + pi/4)" if phase.harmonic == 2 else "a0 + amplitude cos 3(phi - phi0)"
    print(f"steiner point  ({s.x:.17g}, {s.y:.17g})")
    print(f"normal form    {form}")
    print(f"a0             {phase.a0:.17g}")
    print(f"amplitude      {phase.amplitude:.17g}")
    print(f"phi0           {phase.phi0:.17g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="convexsupport",
                     description="Support-function geometry of convex plane curves.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check", help="convexity and lint of a curve file")
    p.add_argument("file")
    p.add_argument("--allow-degenerate", action="store_true",
                   help="accept curves whose p+p'' touches zero")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("report", help="functionals, deficit bounds and equality class")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--allow-degenerate", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("render", help="draw the curve and its constructions as SVG")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--layers", nargs="+", default=["boundary,parallel,evolute"])
    p.add_argument("--parallel", default="L/2pi")
    p.add_argument("--samples", type=int, default=1024)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("sweep", help="randomized check of the deficit inequalities")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--constant-width", action="store_true")
    p.add_argument("--min-radius", type=float, default=0.05)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("canon", help="phase normal form of a single-harmonic (n=2 or 3) curve")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CurveParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConvexityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVEXITY


if __name__ == "__main__":
    sys.exit(main())

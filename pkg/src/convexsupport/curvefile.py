"""Plain-text curve files.

::

    # comment
    a0 5
    h 2 0 1

``a0`` appears exactly once; each ``h <n> <a_n> <b_n>`` line adds one
harmonic.  Numbers are written with 17 significant digits, so a
serialize/parse round trip reproduces every double exactly.
"""
from __future__ import annotations

import math

from .errors import CurveParseError, InvalidArgumentError
from .series import FourierSupport


def _number(token: str, lineno: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise CurveParseError(f"not a number: {token!r}", lineno) from None
    if not math.isfinite(value):
        raise CurveParseError(f"non-finite number: {token!r}", lineno)
    return value


def parse_curve(text: str) -> FourierSupport:
    a0 = None
    harmonics = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        directive, args = tokens[0], tokens[1:]
        if directive == "a0":
            if len(args) != 1:
                raise CurveParseError("expected 'a0 <value>'", lineno)
            if a0 is not None:
                raise CurveParseError("a0 given more than once", lineno)
            a0 = _number(args[0], lineno)
        elif directive == "h":
            if len(args) != 3:
                raise CurveParseError("expected 'h <n> <a_n> <b_n>'", lineno)
            try:
                n = int(args[0])
            except ValueError:
                raise CurveParseError(f"harmonic index is not an integer: {args[0]!r}", lineno) from None
            if n < 1:
                raise CurveParseError(f"harmonic index must be >= 1, got {n}", lineno)
            if n in seen:
                raise CurveParseError(f"duplicate harmonic n={n} (first on line {seen[n]})", lineno)
            seen[n] = lineno
            harmonics.append((n, _number(args[1], lineno), _number(args[2], lineno)))
        else:
            raise CurveParseError(f"unknown directive {directive!r}", lineno)
    if a0 is None:
        raise CurveParseError("missing 'a0' line")
    try:
        return FourierSupport(a0, tuple(harmonics))
    except InvalidArgumentError as exc:
        raise CurveParseError(str(exc)) from exc


def _fmt(x: float) -> str:
    return format(x, ".17g")


def serialize_curve(p: FourierSupport, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"a0 {_fmt(p.a0)}")
    lines.extend(f"h {n} {_fmt(a)} {_fmt(b)}" for n, a, b in p.harmonics)
    return "\n".join(lines) + "\n"


def read_curve(path) -> FourierSupport:
    with open(path, encoding="utf-8") as fh:
        return parse_curve(fh.read())


def write_curve(path, p: FourierSupport, comments=()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_curve(p, comments))

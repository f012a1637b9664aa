"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument is outside an operation's domain."""


class ConvexityError(ValueError):
    """The support function is not convex: ``p + p''`` dips to or below the tolerance."""

    def __init__(self, min_radius, argmin_phi, tol):
        self.min_radius = min_radius
        self.argmin_phi = argmin_phi
        self.tol = tol
        super().__init__(
            f"curve is not convex: min(p + p'') = {min_radius:.17g} at phi = {argmin_phi:.17g} "
            f"(required > {tol:g})"
        )


class CurveParseError(ValueError):
    """Malformed curve file; ``lineno`` is 1-based (0 when the error is file-wide)."""

    def __init__(self, message, lineno=0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)

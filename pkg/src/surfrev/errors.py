"""Exception types raised by the surfrev geometry kernels."""


class GeometryError(Exception):
    """Base class for all surfrev errors."""


class NonRealVector(GeometryError):
    """A real-only operation received a vector with non-negligible imaginary parts."""


class NullVector(GeometryError):
    """Normalization of a vector whose self scalar product is (numerically) zero."""


class NullNormal(GeometryError):
    """The tangent plane is light-like: the chart cross product is null."""


class DegenerateMetric(GeometryError):
    """|EG - F^2| fell below the scale-aware tolerance."""


class DegenerateSecondForm(GeometryError):
    """||eg| - f^2| fell below tolerance; second Gaussian curvature undefined."""


class DomainError(GeometryError):
    """An elementary function was evaluated outside its domain.

    Carries the function name and the offending value.
    """

    def __init__(self, fn: str, value):
        self.fn = fn
        self.value = value
        super().__init__(f"{fn}: value {value!r} outside the function domain")


class DivisionByZeroValue(GeometryError):
    """Jet division by a jet whose value part is zero."""


class StencilOutsideDomain(GeometryError):
    """A finite-difference stencil would leave the chart's parameter rectangle."""


class ExcludedPoint(GeometryError):
    """Evaluation requested at a parameter value marked singular for this chart."""


class ConstraintViolation(GeometryError):
    """Surface parameters violate a catalog constraint.

    The message quotes the violated inequality verbatim.
    """

    def __init__(self, constraint: str, detail: str = ""):
        self.constraint = constraint
        msg = constraint if not detail else f"{constraint} ({detail})"
        super().__init__(msg)


class InfeasibleDomain(GeometryError):
    """The printed chart formula has an empty real domain for these parameters."""


class NonMonotoneE(GeometryError):
    """Bour correspondence needs a strictly monotone E(t) on the revolution side."""


class BisectionFailure(GeometryError):
    """The Bour correspondence target fell outside the bracketing interval."""


class InconsistentCharacter(GeometryError):
    """Causal characters of a ruled surface's data disagree across samples."""

    def __init__(self, what: str, samples):
        self.what = what
        self.samples = list(samples)
        super().__init__(f"{what}: causal character changes across samples {self.samples}")


class NotRuled(GeometryError):
    """The requested surface has no ruling decomposition x = alpha(s) + t*beta(s)."""

"""Exception hierarchy for the halfplane package."""


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


class ZeroCycleInput(GeometryError):
    """An operation received the identically-zero cycle."""


class ZeroScalar(GeometryError):
    """A scale factor that must be nonzero was zero."""


class NotATwoCycle(GeometryError):
    """Center/radius extraction needs a cycle with nonzero quadratic part."""


class RankDeficientInput(GeometryError):
    """Generators span a smaller subspace than the caller asserted."""


class CoincidentPoints(GeometryError):
    """Two points that must be distinct coincide."""


class PointNotInUpperHalf(GeometryError):
    """A point of the hyperbolic plane must have y > 0."""


class InvalidLineCycle(GeometryError):
    """Cycle does not define a hyperbolic line (axis pairing or norm fails)."""


class CollinearTriangle(GeometryError):
    """The three vertices lie on a single hyperbolic line."""


class NotConcurrent(GeometryError):
    """Orthocenter requested but the discriminant is not positive."""


class NotDegenerate(GeometryError):
    """Ideal-point witness requested but the discriminant is nonzero."""


class NotDivergent(GeometryError):
    """Common perpendicular requested but the discriminant is not negative."""


class CoincidentLines(GeometryError):
    """Two lines that must be distinct define the same line."""


class CoincidentGeodesics(GeometryError):
    """Two geodesics that must be distinct coincide."""


class DegenerateInput(GeometryError):
    """Euclidean construction has no solution for this input."""


class OracleInconsistent(GeometryError):
    """The Euclidean cross-check contradicted itself; signals a bug."""


class InternalInvariant(GeometryError):
    """A condition guaranteed by the underlying theory failed numerically."""


class ParseError(GeometryError):
    """Malformed input document."""


class InvalidTriangle(GeometryError):
    """Input triangle violates the upper-half-plane or distinctness rules."""


class InvalidLine(GeometryError):
    """Input does not describe a valid hyperbolic line."""

"""Exception hierarchy shared by all modules."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class NotFullDimensional(GeometryError):
    pass


class Unbounded(GeometryError):
    pass


class NoInterior(GeometryError):
    """The halfspace system is empty or has no interior point."""


class OriginNotInterior(GeometryError):
    pass


class DimensionMismatch(GeometryError):
    pass


class ZeroScale(GeometryError):
    pass


class SingularMatrix(GeometryError):
    pass


class EmptyOrLowerDimensionalIntersection(GeometryError):
    pass


class NotContained(GeometryError):
    pass


class NotMinkowskiCentered(GeometryError):
    pass


class NotSymmetric(GeometryError):
    pass


class ParameterOutOfRange(GeometryError):
    pass


class EvenK(ParameterOutOfRange):
    pass


class DomainError(GeometryError):
    pass


class PrerequisiteFails(GeometryError):
    pass


class UnknownScenario(GeometryError):
    pass


class BadParams(GeometryError):
    pass


class LPError(GeometryError):
    """The simplex method could not reach a conclusion."""

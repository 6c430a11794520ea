"""Exception types shared across the package."""


class ConicGinError(Exception):
    """Base class for all package errors."""


class ZeroInverse(ConicGinError):
    """Requested the inverse of 0 in GF(p)."""


class DegenerateInput(ConicGinError):
    """Point configuration cannot be built (r < 2, or not enough field elements)."""


class CharacteristicHazard(ConicGinError):
    """The working prime is too small for the requested degree; falling
    factorials that are nonzero over the integers could vanish mod p."""


class GenericityFailure(ConicGinError):
    """A random change of coordinates was not generic: trials disagreed or
    the extracted initial ideal is not of staircase shape. Retry with a new
    seed or a larger prime."""


class MalformedHVector(ConicGinError):
    """The given h-vector is not realizable by a strictly decreasing
    two-variable staircase."""


class DomainError(ConicGinError):
    """Arguments outside the supported domain of an operation."""


class UnsupportedCase(ConicGinError):
    """No closed form exists for this (r, m); only oracle data is available."""


class EmptyTable(ConicGinError):
    """Betti table has no shifts to take extremes of."""

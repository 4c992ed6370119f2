"""Exception types shared across the package."""


class BrickError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInterval(BrickError):
    """Interval constructed with lo >= hi (zero or negative length)."""


class DimensionMismatch(BrickError):
    """Objects of different ambient dimensions were combined."""


class BrickOutsideParent(BrickError):
    """A brick endpoint lies strictly outside the parent brick."""


class BadAxis(BrickError):
    """Axis index outside 1..d."""


class BadCodimension(BrickError):
    """Number of free axes outside 1..d-1."""


class QueryOutsideParent(BrickError):
    """A flat's fixed coordinate lies outside the parent brick."""


class BadK(BrickError):
    """Parameter k below the family's minimum."""


class ConstructionInvalid(BrickError):
    """A generator's self-verification failed; signals an implementation bug."""


class ResourceLimit(BrickError):
    """Search node budget exceeded before the search finished."""


class ParseError(BrickError):
    """Malformed partition document."""


class BadDimensionForFormat(BrickError):
    """Export format does not support the partition's dimension."""

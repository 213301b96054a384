"""Exception hierarchy.

Domain errors map to CLI exit code 2, size guards to exit code 3.
"""


class HilbRegError(Exception):
    """Base class for all library errors."""


class DomainError(HilbRegError, ValueError):
    """An input is mathematically outside an operation's domain."""


class DimensionMismatch(DomainError):
    pass


class DegreeError(DomainError):
    """Degree-0 input where a positive degree is required, or mixed degrees."""


class NotAdmissible(DomainError):
    """The polynomial has no Gotzmann decomposition."""


class NotStronglyStable(DomainError):
    pass


class TailInIdeal(DomainError):
    pass


class DegreeMismatch(DomainError):
    pass


class HeadMissing(DomainError):
    pass


class ChartMiss(DomainError):
    """The subspace does not lie in the requested Borel chart."""


class RankDeficient(DomainError):
    pass


class SizeGuardExceeded(HilbRegError):
    """A combinatorial size bound was exceeded; ``counts`` names the offenders."""

    def __init__(self, message, counts=None):
        super().__init__(message)
        self.counts = dict(counts or {})

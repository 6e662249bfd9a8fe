"""Exception types shared across the package.

Everything derives from ValueError so callers who do not care about the
fine-grained class can catch the usual thing.
"""


class TodaRppError(ValueError):
    pass


class ShapeError(TodaRppError):
    """Malformed matrix / partition input."""


class PoleError(TodaRppError):
    """A substitution made a denominator vanish."""


class NotAUnitError(TodaRppError):
    """Power-series expansion of a fraction whose denominator has no constant term."""


class DomainError(TodaRppError):
    """A lattice query at a point outside the regular subset."""


class WindowError(TodaRppError):
    """A computation needs values outside the declared finite window."""


class SingularMinorError(TodaRppError):
    """A tau minor consumed by the dependent-variable transformation vanished."""

    def __init__(self, s, t, n):
        self.site = (s, t, n)
        super().__init__(f"vanishing tau minor at (s={s}, t={t}, n={n})")


class GaugeError(TodaRppError):
    """A column gauge factor is zero."""


class NonvanishingError(TodaRppError):
    """A solution value required to be nonzero evaluated to zero."""


class UndefinedAlphaError(TodaRppError):
    """An alpha-grid position matched by neither defining clause."""


class RangeError(TodaRppError):
    """An alpha-grid position matched a clause but with an out-of-range shift."""


class WeightError(TodaRppError):
    """A reverse-plane-partition weight factor is undefined or zero."""


class BijectionError(TodaRppError):
    """A path tuple that is not in the domain of the bijection."""


class PreconditionError(TodaRppError):
    """An operation precondition (e.g. convex corner) does not hold."""


class ResampleExhaustedError(TodaRppError):
    """Too many singular random samples in a row."""

"""Exception and warning types shared across the package."""


class WaveToolError(Exception):
    """Base class for all wavetool errors."""


class ZeroMass(WaveToolError):
    """Filter coefficients sum to (numerically) zero; cannot normalize."""


class NotDivisible(WaveToolError):
    """Filter symbol is not divisible by (1+z) to the requested order."""


class TooShort(WaveToolError):
    """Reduction would leave an empty filter."""


class BadParity(WaveToolError):
    """Spline orders N, Ñ must have even sum."""


class UnknownOrder(WaveToolError):
    """No bundled coefficients for the requested filter order."""


class NoConvergence(WaveToolError):
    """Cascade iteration stopped making progress before reaching tolerance."""


class UnsupportedFilter(WaveToolError):
    """Operation is undefined for this filter (e.g. cascading a point mass)."""


class InvalidBank(WaveToolError):
    """Filter pair violates the bank invariants (normalization or PR)."""


class DegenerateDualWarning(UserWarning):
    """Reduction shrank the dual to a single tap (point-mass scaling function)."""

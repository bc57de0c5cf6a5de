"""Exception hierarchy.

Every error raised by the package derives from :class:`ResolventBoundsError`,
which is itself a :class:`ValueError` so that callers validating user input can
catch the whole family at once.
"""


class ResolventBoundsError(ValueError):
    pass


class NonFinite(ResolventBoundsError):
    pass


class NotSquare(ResolventBoundsError):
    pass


class NotHermitian(ResolventBoundsError):
    pass


class SpectrumCollision(ResolventBoundsError):
    """The evaluation point lies on (or within tolerance of) the spectrum."""


class DegeneratePair(ResolventBoundsError):
    """``1 - conj(z) w`` vanishes, so the pseudo-hyperbolic distance is undefined."""


class OutOfDomain(ResolventBoundsError):
    pass


class PoleHit(ResolventBoundsError):
    pass


class BoundaryZero(ResolventBoundsError):
    """A Blaschke zero on or outside the unit circle."""


class NotUnimodular(ResolventBoundsError):
    pass


class NotUnimodularZeta(ResolventBoundsError):
    pass


class DegenerateBeta(ResolventBoundsError):
    """``beta == 1 - r**2`` or ``beta == 0``: the Chebyshev argument is constant."""


class HypothesisViolated(ResolventBoundsError):
    pass


class NoRootFound(ResolventBoundsError):
    pass


class GridTooCoarse(ResolventBoundsError):
    pass

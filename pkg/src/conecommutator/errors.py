"""Exception hierarchy.

Every error raised on purpose by this package derives from :class:`ConeError`
so callers (the CLI in particular) can map failures to exit codes.
"""


class ConeError(Exception):
    """Base class for package errors."""


class InvalidParameters(ConeError, ValueError):
    """Raised when (sigma, alpha, k) violate an operation's preconditions."""


class SingularPoint(ConeError):
    """Raised near a point where some denominator vanishes."""


class DenominatorNearZero(SingularPoint):
    """A closed-form denominator has modulus below ``EPS_SING``."""


class SigmaOnCotPole(SingularPoint):
    """``sin(sigma)`` is too small to evaluate ``sigma*cot(sigma)``."""


class ResonantMode(SingularPoint):
    """``|1 - omega**2 exp(2i sigma)|`` is below ``EPS_SING``.

    Happens only as k -> 0 with (1 - alpha) sigma a multiple of pi, where
    harmonic fields make the energy form degenerate.
    """


class NeumannDegenerate(SingularPoint):
    """``|1 - omega**2|`` is below ``EPS_SING``; the amplitudes are undefined."""


class EnergyFormSingular(SingularPoint):
    """Cholesky factorisation of the energy form failed."""


class NonRealResult(ConeError):
    """A quantity that must be real has a significant imaginary part.

    This indicates a transcription bug, not a mathematical condition.
    """

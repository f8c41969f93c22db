"""Exception hierarchy shared across the package."""


class PairSqueezeError(Exception):
    """Base class for all errors raised by pairsqueeze."""


class DomainError(PairSqueezeError):
    """A parameter lies outside the supported domain (e.g. q < 0)."""


class SeriesOverflowError(PairSqueezeError):
    """A series term or sum left the double-precision range."""


class NotSymmetricError(PairSqueezeError):
    """Input matrix is not symmetric within the requested tolerance."""


class NoConvergenceError(PairSqueezeError):
    """Iterative scheme failed to meet its threshold within the sweep budget."""


class NotUnitaryError(PairSqueezeError):
    """A 2x2 complex matrix failed the unitarity check."""


class ZeroAmplitudeError(PairSqueezeError):
    """Operation undefined at zeta = 0 (every mixer phase is a minimizer)."""


class TruncationError(PairSqueezeError):
    """Fock-space truncation too small for the requested state."""


class OracleCheckError(PairSqueezeError):
    """An internal self-check failed (decoupling residual, first moments)."""

"""Exception types raised by the gadbounds package.

Every error is a subclass of :class:`GadBoundsError`, so callers can catch
the whole family with one ``except`` clause while tests pin down the exact
failure mode.
"""


class GadBoundsError(Exception):
    """Base class for all gadbounds errors."""


# --- linear algebra (qmat) ---------------------------------------------------

class NotHermitian(GadBoundsError):
    """Input matrix is not Hermitian within tolerance."""


class NoConvergence(GadBoundsError):
    """Iterative diagonalizer failed to converge within the sweep limit."""


class NotPSD(GadBoundsError):
    """Matrix has an eigenvalue below the negativity floor."""


class SingularState(GadBoundsError):
    """Matrix logarithm requested for a singular state without the
    support-restriction flag."""


class OutsideBall(GadBoundsError):
    """Bloch vector lies outside the closed unit ball (plus tolerance)."""


class WrongDim(GadBoundsError):
    """Matrix or state has an unsupported dimension."""


# --- channels ----------------------------------------------------------------

class NonPositiveTemperature(GadBoundsError):
    """Bath temperature must be strictly positive."""


class EtaOutOfRange(GadBoundsError):
    """Damping parameter must lie in [0, 1]."""


class DimMismatch(GadBoundsError):
    """Operands have incompatible dimensions."""


class LambdaOutOfRange(GadBoundsError):
    """Mixing weight must lie in [0, 1]."""


# --- thermo ------------------------------------------------------------------

class SingularEquilibrium(GadBoundsError):
    """Equilibrium state must be full rank."""


# --- geometry ----------------------------------------------------------------

class ClampViolation(GadBoundsError):
    """State overlap fell outside [0, 1] by more than the clamp window."""


class BadTimeOrder(GadBoundsError):
    """Time arguments must satisfy 0 <= t1 <= t2."""


class BadLambdaOrder(GadBoundsError):
    """Mixing weights must satisfy 0 < lambda1 <= lambda2 <= 1."""


# --- photonic ----------------------------------------------------------------

class ZeroShots(GadBoundsError):
    """Shot budget must be a positive integer."""


class TooFewResamples(GadBoundsError):
    """Monte Carlo error estimation needs at least two resamples."""


# --- cli ---------------------------------------------------------------------

class InvalidGrid(GadBoundsError):
    """Sweep grid is empty, non-increasing, or otherwise malformed."""


class IOFailure(GadBoundsError):
    """Output file could not be written."""

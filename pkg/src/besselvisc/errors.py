"""Exception types shared across the library."""


class BesselViscError(Exception):
    """Base class for library-specific errors."""


class PoleError(BesselViscError):
    """Evaluation was requested at (or too close to) a pole."""


class ConvergenceError(BesselViscError):
    """An iterative scheme failed to reach its tolerance within its budget."""


class InsufficientZerosError(BesselViscError):
    """The supplied zero table is too short for the requested tail accuracy.

    ``required_count`` carries an estimate of the table size that would
    satisfy the truncation bound, so callers can regrow the table.
    """

    def __init__(self, message, required_count=None):
        super().__init__(message)
        self.required_count = required_count


class BelowMinTimeError(BesselViscError):
    """Series evaluation was requested below the policy's minimum time.

    Use the short-time asymptotic branch instead (see the asymptotics
    module or ``sample_curve``, which switches automatically).
    """


class ExtrapolationError(BesselViscError):
    """An evaluation time lies outside the supplied load history."""

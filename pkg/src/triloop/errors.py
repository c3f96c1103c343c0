"""Exception types shared across the package."""


class TriloopError(Exception):
    """Base class for all triloop errors."""


class InvalidInputError(TriloopError, ValueError):
    """An argument violates a documented precondition (shape, norm, hermiticity...)."""


class TableRangeError(InvalidInputError):
    """A tabulated pulse or detuning was evaluated outside its time range."""


class DegenerateAngleError(TriloopError):
    """Both P and C envelopes vanish, so the mixing angle is undefined."""


class DegenerateDarkStateError(TriloopError):
    """Both effective couplings vanish, so the dark state is undefined."""


class AccuracyError(TriloopError):
    """Norm drift exceeded tolerance; the time step is too coarse."""


class SynthesisError(TriloopError):
    """Pulse synthesis failed (mixing-angle derivative undefined on the grid)."""


class NotApplicableError(TriloopError):
    """The configuration matches none of the closed-form recipe families."""


class ConfigError(TriloopError):
    """A config file or override could not be parsed or references unknown keys."""

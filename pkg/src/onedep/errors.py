"""Exception types shared across the package."""


class OneDepError(Exception):
    """Base class for errors raised by this package."""


class NonInvertibleSeries(OneDepError):
    """Series has no reciprocal because its constant term vanishes."""


class CompositionDomainError(OneDepError):
    """Composition argument must have no constant term."""


class ShiftDomainError(OneDepError):
    """Un-shifting requires a constant term equal to one."""


class ValidationError(OneDepError):
    """An input value violates a documented invariant."""


class DepthExceeded(OneDepError):
    """Requested depth is beyond what exact enumeration can afford."""


class SamplerUnavailable(OneDepError):
    """The requested model has no path sampler."""


class EmptyTrials(OneDepError):
    """A Monte Carlo run was requested with no trials."""


class InternalInconsistency(OneDepError):
    """A cross-check that can only fail on an implementation bug failed."""


class NotOneDependentWarning(UserWarning):
    """Run sequence is not realizable by a stationary 1-dependent process."""

"""Exception types shared across the package.

All structural-input failures derive from ValueError so callers that do not
care about the fine-grained type can catch the usual builtin.  Out-of-support
density arguments do NOT raise: log densities return -inf there.
"""


class MultivecError(ValueError):
    """Base class for all package-specific errors."""


class DimensionMismatch(MultivecError):
    """Vector length or block structure does not match the declared partition."""


class NotPositiveDefinite(MultivecError):
    """A scale matrix has a nonpositive Cholesky pivot (or is not symmetric)."""


class ParameterOutOfDomain(MultivecError):
    """A generator or family parameter violates its admissibility constraint."""


class NonPositiveInput(MultivecError):
    """An argument that must be strictly positive is zero or negative."""


class NonFiniteLikelihood(MultivecError):
    """A likelihood evaluation produced NaN or +inf at valid parameters."""


class DegenerateSample(MultivecError):
    """Sample has no usable variation (e.g. constant data in gamma_init)."""


class EmptySample(MultivecError):
    """An operation received zero observations."""


class QuadratureFailure(RuntimeError):
    """Numerical integration did not converge to the requested tolerance."""


class DegenerateWeights(RuntimeError):
    """Importance-sampling weights collapsed (effective sample size too small)."""

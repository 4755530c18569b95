"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the function's domain of definition."""


class IntegrandError(RuntimeError):
    """An integrand returned NaN or infinity at an interior node."""


class SamplerStarvationError(RuntimeError):
    """A parameter sampler rejected too many consecutive draws."""

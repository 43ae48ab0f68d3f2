"""Exception and warning classes shared across the package."""


class DomainError(ValueError):
    """A parameter violates the range its quantity is defined on."""


class DegenerateInputError(DomainError):
    pass


class InfeasibleWindowError(DomainError):
    """A window cannot come from any (beta, beta_t) pair."""


class InversionError(RuntimeError):
    pass


class ValidityDomainError(DomainError):
    """An approximation is evaluated where it is known to break down."""


class SuperluminalAetherError(DomainError):
    pass


class UnconstrainedError(DomainError):
    """The data leave the requested quantity unbounded."""


class ModelViolationError(DomainError):
    pass


class RegimeWarning(UserWarning):
    """Inputs fall outside the regime an approximation assumes."""

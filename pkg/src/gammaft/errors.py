"""Exception hierarchy shared by every gammaft module."""


class GammaFTError(Exception):
    """Base class for all library errors."""


class DomainError(GammaFTError, ValueError):
    """An argument lies outside the domain where the formula holds."""


class PoleError(DomainError):
    """Evaluation at a pole (gamma at non-positive integers, vanishing denominators)."""


class DivergenceError(DomainError):
    """The requested limit does not exist (e.g. the alpha=beta=0 transform at m=0)."""


class ResourceLimitError(GammaFTError, ValueError):
    """A size guard was exceeded (partition order above the enumeration limit)."""


class GammaOverflowError(GammaFTError, OverflowError):
    """An intermediate gamma value does not fit in double precision."""


class ConvergenceError(GammaFTError, ArithmeticError):
    """A numerical integration failed to reach its tolerance."""

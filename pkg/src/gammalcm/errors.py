"""Exception and warning types raised across the package."""


class DomainError(ValueError):
    """Argument outside the domain of a function or family."""


class UnsupportedOrderError(ValueError):
    """Derivative or polygamma order beyond the supported cap."""


class RemovablePointError(DomainError):
    """Series requested too close to a removable singularity."""


class SeriesMismatchError(ValueError):
    """Series combined with different expansion points or orders."""


class ConvergenceError(ArithmeticError):
    """Adaptive refinement exhausted its subdivision budget."""


class ParseError(ValueError):
    """Malformed family text or command-line value."""


class ConditioningWarning(RuntimeWarning):
    """Intermediate terms dwarf the result; expect lost digits."""


class CoefficientGrowthWarning(RuntimeWarning):
    """Series coefficients grew past the overflow guard."""

"""Exception hierarchy shared by all suqosc modules."""


class SuqoscError(Exception):
    """Base class for all errors raised by suqosc."""


class ParameterDomainError(SuqoscError, ValueError):
    """A deformation parameter or numeric argument lies outside its domain."""


class RegimeError(SuqoscError, ValueError):
    """An operation was requested for a regime in which it is not defined."""


class UnsupportedCaseError(SuqoscError, NotImplementedError):
    """No closed form is available for the requested (l, kind, regime) case."""


class BranchNotAdmissibleError(SuqoscError, LookupError):
    """The requested root branch does not exist for the given parameters."""


class BranchDisappearedError(SuqoscError, RuntimeError):
    """Root classification changed across a finite-difference stencil."""


class QuadratureError(SuqoscError, ArithmeticError):
    """Quadrature failed to reach its tolerance.

    The best available estimate is kept on the exception so callers can
    still inspect it.
    """

    def __init__(self, message, estimate, error):
        super().__init__(message)
        self.estimate = estimate
        self.error = error

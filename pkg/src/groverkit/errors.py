"""Exception types raised by groverkit."""


class GroverError(ValueError):
    """Base class for all input validation errors in this package."""


class InvalidWidthError(GroverError):
    pass


class InvalidGateError(GroverError):
    pass


class InvalidConstantError(GroverError):
    pass


class InvalidPatternError(GroverError):
    pass


class InvalidProblemError(GroverError):
    pass


class NoSolutionsError(GroverError):
    pass


class InvalidCountError(GroverError):
    pass


class UndefinedRatioError(GroverError):
    """Raised when a speedup ratio is requested for a plan with zero iterations."""


class InvalidStateError(GroverError):
    pass

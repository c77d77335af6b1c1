class StokesLabError(Exception):
    """Base class for every error raised by stokeslab."""
    exit_code = 1


class MalformedInputError(StokesLabError, ValueError):
    exit_code = 2


class DegenerateFormError(StokesLabError, ValueError):
    """s + s^T is singular, so the reflection basis is not defined."""
    exit_code = 1


class BudgetExceededError(StokesLabError, RuntimeError):
    exit_code = 3


class InternalInvariantError(StokesLabError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
    exit_code = 1

"""Shared exception types."""


class TokenautError(Exception):
    """Base class for package-specific errors."""


class ScaleGuardExceeded(TokenautError):
    """An instance exceeded a configured size or search budget.

    This is a refusal, not a crash: the instance was rejected before or
    during the computation, and nothing partial is reported.
    """

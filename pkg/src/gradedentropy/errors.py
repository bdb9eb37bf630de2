"""Exception types shared by the library and the command line."""


class ValidationError(ValueError):
    """An input violates a documented precondition or file format."""


class ResourceLimitError(RuntimeError):
    """A computation was refused because it would exceed a configured limit.

    This is a deliberate refusal, not a failure; callers can raise the limit
    explicitly and retry.
    """

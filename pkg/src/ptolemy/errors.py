"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """A request exceeds one of the built-in size guards."""

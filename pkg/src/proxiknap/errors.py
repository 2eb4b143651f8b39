"""Exception types shared across the package."""


class InstanceError(ValueError):
    """Raised for malformed or out-of-range instance data."""


class ResourceLimitError(RuntimeError):
    """Raised when an oracle would exceed its configured resource cap."""


class PreconditionError(RuntimeError):
    """Raised when a caller violates a documented precondition."""

class ConditionError(ValueError):
    """A rank condition required by the operation does not hold."""


class CapExceededError(RuntimeError):
    """Subset enumeration would exceed the configured cap."""


class NotACycleError(ValueError):
    """A chain handed in as a (co)cycle is not one."""

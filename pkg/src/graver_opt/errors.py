"""Exception hierarchy shared by every module."""


class GraverOptError(Exception):
    """Base class for all errors raised by graver_opt."""


class DimensionError(GraverOptError, ValueError):
    pass


class DomainError(GraverOptError, ValueError):
    """An argument lies outside the set the operation is defined on."""


class PreconditionError(GraverOptError, ValueError):
    pass


class BasisTooLargeError(GraverOptError):
    """The Graver basis (or an intermediate set) exceeded the configured cap."""

    def __init__(self, message, partial_count):
        super().__init__(f"{message} (partial count: {partial_count})")
        self.partial_count = partial_count


class BudgetExceededError(GraverOptError):
    """A cone check or dense tensor would exceed its configured budget."""


class InstanceError(GraverOptError, ValueError):
    """Malformed instance document; ``path`` names the offending key."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path

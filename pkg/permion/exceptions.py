"""Custom exceptions for permion."""


class PermionError(ValueError):
    """Base exception for permion errors."""

    pass


class CycleParseError(PermionError):
    """Raised when cycle notation is malformed or names an invalid point."""

    pass


class DegreeMismatchError(PermionError):
    """Raised when permutations or algebra elements have different degrees."""

    pass


class DimensionMismatchError(PermionError):
    """Raised when matrix shapes are incompatible."""

    pass


class SingularMatrixError(PermionError):
    """Raised when a matrix that must be inverted is singular."""

    pass


class CapacityError(PermionError):
    """Raised when a request exceeds a desk-scale cap."""

    def __init__(self, cap: str, requested: int, limit: int) -> None:
        super().__init__(f"{cap}: requested {requested}, limit is {limit}")
        self.cap = cap
        self.requested = requested
        self.limit = limit


class TableauError(PermionError):
    """Raised for invalid frames or tableaux."""

    pass


class OrderingError(PermionError):
    """Raised when an element ordering does not enumerate the whole group."""

    pass


class ModeError(PermionError):
    """Raised for out-of-range modes or invalid occupation strings."""

    pass


class ConfigurationError(PermionError):
    """Raised when an environment override cannot be applied."""

    pass


class ClassFunctionError(PermionError):
    """Raised when a character differs on two elements of one conjugacy class."""

    pass

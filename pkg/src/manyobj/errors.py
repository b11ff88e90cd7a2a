"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Array arguments have incompatible or unexpected shapes."""


class ParameterError(ValueError):
    """A scalar argument is outside its admissible range."""


class BoundsError(IndexError):
    """A label or index refers to a slot that does not exist."""


class EmptySelectionError(ValueError):
    """A reduction was requested over zero valid slots."""


class DomainError(ValueError):
    """Decision variables lie outside the problem's domain."""


class ConfigError(ValueError):
    """A run configuration field is invalid."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class InfeasibleSplitError(ValueError):
    """Fewer valid individuals than the requested population size."""


class ParseError(ValueError):
    """A result file row could not be parsed."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")

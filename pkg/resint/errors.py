from typing import Optional


class ResintError(Exception):
    """Base class for every error raised by resint"""


class ParseError(ResintError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 field: Optional[str] = None):
        """
        Args:
            message: Human-readable description
            line: 1-based line in the offending text, if known
            column: 1-based column in the offending text, if known
            field: Name of the offending field, if known
        """
        self.line = line
        self.column = column
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if field is not None:
            location.append(f"field '{field}'")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)


class ValidationError(ResintError, ValueError):
    pass


class MissingValuesError(ValidationError):
    pass


class DimensionMismatchError(ResintError, ValueError):
    pass


class AlgorithmMismatchError(ResintError):
    pass


class SamplingError(ResintError):
    pass


class NormalFormError(ResintError):
    pass

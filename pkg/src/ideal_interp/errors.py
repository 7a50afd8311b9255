"""Exception taxonomy. The class names double as the stable error identifiers."""


class IdealInterpError(Exception):
    """Base class for every error raised by the library."""

    code = "IdealInterpError"


class ParseError(IdealInterpError, ValueError):
    code = "ParseError"

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SchemaError(IdealInterpError, ValueError):
    code = "SchemaError"


class DimensionMismatch(IdealInterpError, ValueError):
    code = "DimensionMismatch"


class NotLowerSet(IdealInterpError, ValueError):
    code = "NotLowerSet"


class DependentConditions(IdealInterpError, ValueError):
    code = "DependentConditions"


class NotZeroDimensional(IdealInterpError, ValueError):
    code = "NotZeroDimensional"


class NotAGroebnerBasis(IdealInterpError, ValueError):
    code = "NotAGroebnerBasis"


class NotInUniversalClass(IdealInterpError, ValueError):
    code = "NotInUniversalClass"


class NotPoised(IdealInterpError, ValueError):
    code = "NotPoised"

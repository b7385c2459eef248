"""Exception hierarchy for fedder-dp1.

Input errors (bad text, bad files, bad shapes) subclass ``InputError`` and map to
exit status 2 in the CLI; everything else is a mathematical error (exit status 1).
"""
from typing import Optional


class FedderDP1Error(Exception):
    """Base class for all library errors"""


class InputError(FedderDP1Error, ValueError):
    """Malformed user input"""


class ParseError(InputError):
    """Syntax error in an expression, with the byte offset of the offending token"""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class UnknownVariableError(ParseError):
    """Identifier that is neither a variable of the alphabet nor the field generator"""

    def __init__(self, name: str, offset: int, text: str = ""):
        self.name = name
        super().__init__(f"unknown variable {name!r}", offset, text)


class ShapeError(InputError):
    """Polynomial is not a degree-1 del Pezzo sextic y^2 + ... - x^3 - ..."""


class InputFormatError(InputError):
    """Malformed coefficient file or CLI option value"""


class FieldMismatchError(FedderDP1Error, ValueError):
    """Operands live in different fields (or different alphabets)"""


class NotInvertibleError(FedderDP1Error, ZeroDivisionError):
    """Division by zero or singular matrix"""


class FieldTooLargeError(FedderDP1Error, ValueError):
    """Requested field or splitting field exceeds the supported extension degree"""

    def __init__(self, message: str, degree: Optional[int] = None):
        self.degree = degree
        super().__init__(message)


class DegreeMismatchError(FedderDP1Error, ValueError):
    """Degrees of forms, divisors or fields are incompatible"""


class GradingError(FedderDP1Error, ValueError):
    """Substitution image does not have the weight of the variable it replaces"""


class NotNormalizedError(FedderDP1Error, ValueError):
    """Equation still has coefficients that completing squares/cubes removes"""


class WrongShapeError(FedderDP1Error, ValueError):
    """Form lies outside the span {s^(p+1), s^p t, s t^p, t^(p+1)}"""


class InsufficientRootsError(FedderDP1Error, ValueError):
    """Form has fewer than three distinct roots on P^1"""

    def __init__(self, message: str, distinct: int):
        self.distinct = distinct
        super().__init__(message)


class SingularFiberError(FedderDP1Error, ValueError):
    """Weierstrass fiber has vanishing discriminant"""


class UnsupportedCharacteristicError(FedderDP1Error, ValueError):
    """Operation only defined for certain characteristics"""

    def __init__(self, message: str, p: int):
        self.p = p
        super().__init__(message)


class InfeasibleCensusError(FedderDP1Error, ValueError):
    """Exhaustive census larger than the configured ceiling"""

    def __init__(self, instances: int, ceiling: int):
        self.instances = instances
        self.ceiling = ceiling
        super().__init__(
            f"exhaustive census of {instances} instances exceeds ceiling {ceiling}; use sampling"
        )


class ZeroPolynomialError(FedderDP1Error, ValueError):
    """Operation undefined on the zero polynomial"""

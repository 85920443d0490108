"""Exception hierarchy shared by every module in the package."""


class BraidRepError(Exception):
    """Base class for all library errors."""


class PolynomialSyntaxError(BraidRepError, ValueError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))


class WordSyntaxError(PolynomialSyntaxError):
    pass


class NotAUnit(BraidRepError, ArithmeticError):
    pass


class MissingVariable(BraidRepError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ZeroAssignment(BraidRepError, ZeroDivisionError):
    pass


class DimensionMismatch(BraidRepError, ValueError):
    pass


class DimensionTooLarge(BraidRepError, ValueError):
    pass


class IndexOutOfRange(BraidRepError, IndexError):
    pass


class NotMonomialMatrix(BraidRepError, ValueError):
    pass


class GeneratorOutOfRange(BraidRepError, ValueError):
    pass


class StrandCountMismatch(BraidRepError, ValueError):
    pass


class NotEvaluable(BraidRepError, ValueError):
    pass


class NonUnitDeterminant(BraidRepError, ArithmeticError):
    pass


class InvalidParams(BraidRepError, ValueError):
    pass


class InvalidConfig(BraidRepError, ValueError):
    pass

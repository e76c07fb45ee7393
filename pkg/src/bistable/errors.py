"""Exception hierarchy shared by every module."""


class BistableError(Exception):
    """Base class for all errors raised by this package."""


class NotSquare(BistableError, ValueError):
    pass


class Unbalanced(BistableError, ValueError):
    pass


class NoPerfectMatching(BistableError, ValueError):
    pass


class DimensionMismatch(BistableError, ValueError):
    pass


class TooLarge(BistableError):
    """An exhaustive routine was asked to run above its size guard."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds guard {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class PermanentOverflow(BistableError, ArithmeticError):
    pass


class UnknownFixture(BistableError, KeyError):
    pass


class ParseError(BistableError, ValueError):
    """Malformed matrix or edge-list text. ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column

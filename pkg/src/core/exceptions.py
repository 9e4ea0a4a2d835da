from typing import Any, Optional


class RelcatError(Exception):
    """Base class for every error raised by the workbench."""


class FormulaSyntaxError(RelcatError, ValueError):
    def __init__(
        self,
        message: str,
        text: str = "",
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.text = text
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class ArityError(RelcatError, ValueError):
    pass


class TypeMismatch(RelcatError, TypeError):
    def __init__(self, message: str, expected: Any = None, found: Any = None):
        self.expected = expected
        self.found = found
        super().__init__(message)


class FragmentError(RelcatError, ValueError):
    pass


class UnboundLetter(RelcatError, KeyError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(letter)

    def __str__(self) -> str:
        return f"letter {self.letter!r} has no assigned value"


class ModelTooLarge(RelcatError):
    pass


class ArithOverflow(RelcatError, OverflowError):
    pass


class EncodingError(RelcatError, AssertionError):
    pass


class InvalidSize(RelcatError, ValueError):
    pass

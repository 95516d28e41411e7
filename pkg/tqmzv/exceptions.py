"""defines the errors raised by the algebra, the evaluators and the cli"""

from typing import Any


class TqmzvError(Exception):
    def __init__(self, details: str):
        self.details = details
        super().__init__(details)


class DomainError(TqmzvError, ValueError):
    """an operator was applied outside of its domain"""

    def __init__(self, details: str, value: Any = None):
        self.value = value
        super().__init__(details)


class NotInSubspaceError(DomainError):
    def __init__(self, details: str, value: Any = None, subspace: str = ""):
        self.subspace = subspace
        super().__init__(details, value)


class InvalidIndexError(DomainError):
    def __init__(self, details: str, parts: Any = None):
        self.parts = parts
        super().__init__(details, parts)


class InverseMismatchError(TqmzvError):
    def __init__(self, details: str, word: str = ""):
        self.word = word
        super().__init__(details)


class ExpressionError(TqmzvError):
    def __init__(
        self,
        details: str,
        source: str = "",
        position: tuple[int, int] | None = None,
    ):
        self.source = source
        self.position = position
        super().__init__(details)

    def display(self) -> str:
        lines = [f"{self.details}:", f"  {self.source}"]
        if self.position:
            start, end = self.position
            lines.append("  " + " " * start + "^" * max(1, end - start))
        return "\n".join(lines)


class CacheError(TqmzvError):
    def __init__(self, details: str, path: str = ""):
        self.path = path
        super().__init__(details)

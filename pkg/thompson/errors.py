"""
Errors raised by the thompson package.

Everything derives from ThompsonError so the CLI can catch one type.
"""


class ThompsonError(Exception):
    """Base class for all library errors."""


class WordSyntaxError(ThompsonError, ValueError):
    """A binary word or generator word could not be parsed."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at token {position})"
        super().__init__(message)


class FormatError(ThompsonError, ValueError):
    """A branch-pair or automaton file is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AutomatonError(ThompsonError, ValueError):
    """A graph violates one of the tree-automaton conditions."""


class NotReduced(ThompsonError):
    """An operation that needs a reduced tree-diagram got an unreduced one."""


class Unreadable(ThompsonError):
    """A word does not label a path in the automaton."""


class NotALeaf(ThompsonError):
    """Attachment was requested at a vertex with outgoing edges."""


class CapExceeded(ThompsonError):
    """Quotient enumeration found more distinct quotients than allowed."""


class JonesParameterError(ThompsonError, ValueError):
    """The Jones parameter is not a prime in the supported range."""

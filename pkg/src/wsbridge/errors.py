"""Exception types raised by the pipeline stages.

Every error carries a stable ``code`` (used in diagnostics and corpus
manifests) and, where known, the source position it refers to.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .tokens import SourcePos


class WsBridgeError(Exception):
    code = "Error"

    def __init__(self, message: str, pos: SourcePos | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.pos = pos

    def diagnostic(self, path: str) -> str:
        """Format as ``path:line:col: CODE message``."""
        line, col = (self.pos.line, self.pos.column) if self.pos else (1, 0)
        return f"{path}:{line}:{col}: {self.code} {self.message}"


class LexError(WsBridgeError):
    code = "LexError"


class UnterminatedString(LexError):
    code = "UnterminatedString"


class InvalidCharacter(LexError):
    code = "InvalidCharacter"


class LayoutError(WsBridgeError):
    code = "LayoutError"


class IndentMismatch(LayoutError):
    code = "IndentMismatch"


class TabsDisallowed(LayoutError):
    code = "TabsDisallowed"


class ParseError(WsBridgeError):
    code = "ParseError"

    def __init__(self, message: str, pos: SourcePos | None = None,
                 expected: tuple[str, ...] = (), found: object = None) -> None:
        super().__init__(message, pos)
        self.expected = expected
        self.found = found


class NoStatementParser(ParseError):
    code = "NoStatementParser"


class CompositionConflict(WsBridgeError):
    code = "CompositionConflict"


class UnbalancedStream(WsBridgeError):
    code = "UnbalancedStream"

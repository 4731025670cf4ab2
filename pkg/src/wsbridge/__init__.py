"""Indentation-aware parsing on top of reusable block-delimited grammar components.

Pipeline: lexer -> mode dispatcher -> indentation preprocessor -> buffer -> parser.
"""

from .dispatcher import DispatcherState, Mode, Route, dispatch
from .errors import (
    CompositionConflict,
    IndentMismatch,
    InvalidCharacter,
    NoStatementParser,
    ParseError,
    TabsDisallowed,
    UnbalancedStream,
    UnterminatedString,
    WsBridgeError,
)
from .grammar import build_minipython_registry, check_wellformed, parse_module
from .lexer import LexerConfig, lex
from .pipeline import Pipeline, full_stream, parser_tokens
from .preprocessor import IndentState, calc_current_indent, process
from .serializer import delimited_config, render_delimited
from .tokens import (
    Channel,
    ControlTokenConfig,
    IndentPolicy,
    SourcePos,
    Token,
    TokenKind,
    format_token,
    render_token,
)

__version__ = "0.1.0"

__all__ = [
    "Channel",
    "CompositionConflict",
    "ControlTokenConfig",
    "DispatcherState",
    "IndentMismatch",
    "IndentPolicy",
    "IndentState",
    "InvalidCharacter",
    "LexerConfig",
    "Mode",
    "NoStatementParser",
    "ParseError",
    "Pipeline",
    "Route",
    "SourcePos",
    "TabsDisallowed",
    "Token",
    "TokenKind",
    "UnbalancedStream",
    "UnterminatedString",
    "WsBridgeError",
    "build_minipython_registry",
    "calc_current_indent",
    "check_wellformed",
    "delimited_config",
    "dispatch",
    "format_token",
    "full_stream",
    "lex",
    "parse_module",
    "parser_tokens",
    "process",
    "render_delimited",
    "render_token",
]

"""Token algebra shared by every pipeline stage."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Union


@dataclass(frozen=True, slots=True, order=True)
class SourcePos:
    """1-based line, 0-based column measured after tab expansion."""

    line: int
    column: int

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 0:
            raise ValueError(f"invalid source position {self.line}:{self.column}")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class Channel(Enum):
    DEFAULT = auto()
    HIDDEN = auto()


class TokenKind(Enum):
    # content
    NAME = auto()
    INT = auto()
    FLOAT = auto()
    STRING = auto()

    # keywords
    IF = auto()
    ELIF = auto()
    ELSE = auto()
    WHILE = auto()
    FOR = auto()
    IN = auto()
    DEF = auto()
    RETURN = auto()
    PASS = auto()
    BREAK = auto()
    CONTINUE = auto()
    IMPORT = auto()
    AND = auto()
    OR = auto()
    NOT = auto()
    TRUE = auto()
    FALSE = auto()
    NONE = auto()

    # operators and punctuation
    PLUS = auto()
    MINUS = auto()
    STAR = auto()
    SLASH = auto()
    DOUBLESLASH = auto()
    PERCENT = auto()
    DOUBLESTAR = auto()
    EQ = auto()
    NE = auto()
    LT = auto()
    GT = auto()
    LE = auto()
    GE = auto()
    ASSIGN = auto()
    PLUSASSIGN = auto()
    MINUSASSIGN = auto()
    PLUSPLUS = auto()
    LPAREN = auto()
    RPAREN = auto()
    LBRACKET = auto()
    RBRACKET = auto()
    LBRACE = auto()
    RBRACE = auto()
    COMMA = auto()
    COLON = auto()
    DOT = auto()

    # layout
    NEWLINE = auto()
    WS = auto()
    COMMENT = auto()
    LINE_CONT = auto()

    # control
    BLOCK_START = auto()
    BLOCK_END = auto()
    STMT_END = auto()

    EOF = auto()


@dataclass(frozen=True, slots=True)
class DeclaredKind:
    """A token kind declared by a grammar component (e.g. a toy ``PRINT`` keyword)."""

    name: str


Kind = Union[TokenKind, DeclaredKind]

KEYWORDS: dict[str, TokenKind] = {
    "if": TokenKind.IF,
    "elif": TokenKind.ELIF,
    "else": TokenKind.ELSE,
    "while": TokenKind.WHILE,
    "for": TokenKind.FOR,
    "in": TokenKind.IN,
    "def": TokenKind.DEF,
    "return": TokenKind.RETURN,
    "pass": TokenKind.PASS,
    "break": TokenKind.BREAK,
    "continue": TokenKind.CONTINUE,
    "import": TokenKind.IMPORT,
    "and": TokenKind.AND,
    "or": TokenKind.OR,
    "not": TokenKind.NOT,
    "True": TokenKind.TRUE,
    "False": TokenKind.FALSE,
    "None": TokenKind.NONE,
}

OPERATORS: dict[str, TokenKind] = {
    "**": TokenKind.DOUBLESTAR,
    "//": TokenKind.DOUBLESLASH,
    "==": TokenKind.EQ,
    "!=": TokenKind.NE,
    "<=": TokenKind.LE,
    ">=": TokenKind.GE,
    "+=": TokenKind.PLUSASSIGN,
    "-=": TokenKind.MINUSASSIGN,
    "++": TokenKind.PLUSPLUS,
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "%": TokenKind.PERCENT,
    "<": TokenKind.LT,
    ">": TokenKind.GT,
    "=": TokenKind.ASSIGN,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "[": TokenKind.LBRACKET,
    "]": TokenKind.RBRACKET,
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
    ",": TokenKind.COMMA,
    ":": TokenKind.COLON,
    ".": TokenKind.DOT,
}

LAYOUT_KINDS = frozenset(
    {TokenKind.NEWLINE, TokenKind.WS, TokenKind.COMMENT, TokenKind.LINE_CONT}
)
CONTROL_KINDS = frozenset(
    {TokenKind.BLOCK_START, TokenKind.BLOCK_END, TokenKind.STMT_END}
)
OPEN_KINDS = frozenset({TokenKind.LPAREN, TokenKind.LBRACKET, TokenKind.LBRACE})
CLOSE_KINDS = frozenset({TokenKind.RPAREN, TokenKind.RBRACKET, TokenKind.RBRACE})


def is_content(kind: Kind) -> bool:
    """True for tokens that carry program text (not layout, control or EOF)."""
    return (
        kind not in LAYOUT_KINDS
        and kind not in CONTROL_KINDS
        and kind is not TokenKind.EOF
    )


@dataclass(frozen=True, slots=True)
class Token:
    kind: Kind
    lexeme: str
    channel: Channel
    pos: SourcePos
    end: SourcePos = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.end is None:
            object.__setattr__(self, "end", self.pos)

    @classmethod
    def synth(cls, kind: Kind, at: Token) -> Token:
        """A zero-width token positioned at the token that triggered it."""
        return cls(kind, "", Channel.DEFAULT, at.pos, at.pos)

    @property
    def hidden(self) -> bool:
        return self.channel is Channel.HIDDEN

    def __repr__(self) -> str:
        return f"{self.kind.name}({self.lexeme!r})@{self.pos}"


@dataclass(frozen=True, slots=True)
class ControlTokenConfig:
    block_start_glyph: str = "⦃"
    block_end_glyph: str = "⦄"
    stmt_end_glyphs: tuple[str, ...] = ("⁏", ";")

    def __post_init__(self) -> None:
        if not self.stmt_end_glyphs:
            raise ValueError("at least one statement-end glyph is required")
        glyphs = [self.block_start_glyph, self.block_end_glyph, *self.stmt_end_glyphs]
        if any(not g for g in glyphs):
            raise ValueError("control glyphs must be non-empty")
        if len(set(glyphs)) != len(glyphs):
            raise ValueError("control glyphs must be pairwise distinct")
        for g in glyphs:
            if g in OPERATORS or g in KEYWORDS or g[0] in "#\\'\"" or g[0].isalnum():
                raise ValueError(f"control glyph {g!r} collides with another token")


@dataclass(frozen=True, slots=True)
class IndentPolicy:
    tab_stop: int = 8
    allow_tabs: bool = True

    def __post_init__(self) -> None:
        if self.tab_stop < 1:
            raise ValueError("tab_stop must be >= 1")


def render_token(t: Token, cfg: ControlTokenConfig = ControlTokenConfig()) -> str:
    kind = t.kind
    if kind is TokenKind.BLOCK_START:
        return cfg.block_start_glyph
    if kind is TokenKind.BLOCK_END:
        return cfg.block_end_glyph
    if kind is TokenKind.STMT_END:
        return cfg.stmt_end_glyphs[0]
    if kind is TokenKind.NEWLINE:
        return t.lexeme or "\n"
    if kind is TokenKind.LINE_CONT:
        return "\\"
    return t.lexeme


def format_token(t: Token) -> str:
    """Debug line: ``LINE:COL KIND "lexeme" CHANNEL``."""
    lexeme = json.dumps(t.lexeme, ensure_ascii=False)
    return f"{t.pos.line}:{t.pos.column} {t.kind.name} {lexeme} {t.channel.name}"

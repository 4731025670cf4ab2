"""Lossless lexer that keeps layout as hidden-channel tokens.

Whitespace runs, comments, physical line breaks and line-continuation
backslashes become real tokens so the indentation stage can see them.
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

from .errors import InvalidCharacter, UnterminatedString
from .tokens import (
    KEYWORDS,
    OPERATORS,
    Channel,
    ControlTokenConfig,
    IndentPolicy,
    Kind,
    SourcePos,
    Token,
    TokenKind,
)


@dataclass(frozen=True)
class LexerConfig:
    indent_policy: IndentPolicy = IndentPolicy()
    control_tokens: ControlTokenConfig = ControlTokenConfig()
    recognize_control_glyphs: bool = False
    # keywords contributed by grammar components, on top of KEYWORDS
    extra_keywords: Mapping[str, Kind] = field(default_factory=dict)


_WS = re.compile(r"[ \t]+")
_COMMENT = re.compile(r"#[^\r\n]*")
_NUMBER = re.compile(r"\d+\.\d+(?:[eE][+-]?\d+)?|\d+")
_NAME = re.compile(r"[^\W\d]\w*")
_OPS = sorted(OPERATORS, key=len, reverse=True)


def advance_pos(line: int, col: int, text: str, tab_stop: int) -> tuple[int, int]:
    """Position reached after ``text`` starting at (line, col)."""
    for ch in text:
        if ch == "\n":
            line += 1
            col = 0
        elif ch == "\t":
            col += tab_stop - col % tab_stop
        elif ch != "\r":
            col += 1
    return line, col


class _Scanner:
    def __init__(self, source: str, cfg: LexerConfig) -> None:
        self.src = source
        self.cfg = cfg
        self.tab = cfg.indent_policy.tab_stop
        self.i = 0
        self.line = 1
        self.col = 0
        ctl = cfg.control_tokens
        glyphs: dict[str, TokenKind] = {g: TokenKind.STMT_END for g in ctl.stmt_end_glyphs}
        if cfg.recognize_control_glyphs:
            glyphs[ctl.block_start_glyph] = TokenKind.BLOCK_START
            glyphs[ctl.block_end_glyph] = TokenKind.BLOCK_END
        self.glyphs = sorted(glyphs.items(), key=lambda kv: len(kv[0]), reverse=True)
        self.keywords = {**KEYWORDS, **cfg.extra_keywords}

    def make(self, kind: Kind, lexeme: str, channel: Channel = Channel.DEFAULT) -> Token:
        start = SourcePos(self.line, self.col)
        self.i += len(lexeme)
        self.line, self.col = advance_pos(self.line, self.col, lexeme, self.tab)
        return Token(kind, lexeme, channel, start, SourcePos(self.line, self.col))

    def string_end(self) -> int:
        src, i = self.src, self.i
        quote = src[i]
        if src.startswith(quote * 3, i):
            close = quote * 3
            j = i + 3
            while j < len(src):
                if src[j] == "\\":
                    j += 2
                elif src.startswith(close, j):
                    return j + 3
                else:
                    j += 1
            raise UnterminatedString("EOF inside triple-quoted string", self.here())
        j = i + 1
        while j < len(src):
            ch = src[j]
            if ch == "\\":
                j += 3 if src.startswith("\r\n", j + 1) else 2
            elif ch == quote:
                return j + 1
            elif ch in "\r\n":
                break
            else:
                j += 1
        raise UnterminatedString("end of line inside string literal", self.here())

    def here(self) -> SourcePos:
        return SourcePos(self.line, self.col)

    def tokens(self) -> Iterator[Token]:
        src = self.src
        n = len(src)
        while self.i < n:
            i = self.i
            ch = src[i]
            if ch == "\n":
                yield self.make(TokenKind.NEWLINE, "\n", Channel.HIDDEN)
                continue
            if ch == "\r":
                if src.startswith("\r\n", i):
                    yield self.make(TokenKind.NEWLINE, "\r\n", Channel.HIDDEN)
                    continue
                raise InvalidCharacter("bare carriage return", self.here())
            if ch in " \t":
                m = _WS.match(src, i)
                yield self.make(TokenKind.WS, m.group(), Channel.HIDDEN)
                continue
            if ch == "#":
                m = _COMMENT.match(src, i)
                yield self.make(TokenKind.COMMENT, m.group(), Channel.HIDDEN)
                continue
            if ch == "\\":
                if src.startswith("\n", i + 1) or src.startswith("\r\n", i + 1):
                    yield self.make(TokenKind.LINE_CONT, "\\", Channel.HIDDEN)
                    continue
                raise InvalidCharacter("backslash not followed by a line break", self.here())
            if ch in "\"'":
                end = self.string_end()
                yield self.make(TokenKind.STRING, src[i:end])
                continue
            if ch.isdigit():
                m = _NUMBER.match(src, i)
                text = m.group()
                kind = TokenKind.INT if text.isdigit() else TokenKind.FLOAT
                yield self.make(kind, text)
                continue
            glyph = next(((g, k) for g, k in self.glyphs if src.startswith(g, i)), None)
            if glyph is not None:
                yield self.make(glyph[1], glyph[0])
                continue
            m = _NAME.match(src, i)
            if m is not None:
                text = m.group()
                yield self.make(self.keywords.get(text, TokenKind.NAME), text)
                continue
            op = next((o for o in _OPS if src.startswith(o, i)), None)
            if op is not None:
                yield self.make(OPERATORS[op], op)
                continue
            raise InvalidCharacter(f"unexpected character {ch!r}", self.here())
        yield Token(TokenKind.EOF, "", Channel.DEFAULT, self.here())


def iter_tokens(source: str, cfg: LexerConfig = LexerConfig()) -> Iterator[Token]:
    """Lazily lex ``source``; the final token is always EOF."""
    return _Scanner(source, cfg).tokens()


def lex(source: str, cfg: LexerConfig = LexerConfig()) -> list[Token]:
    return list(iter_tokens(source, cfg))

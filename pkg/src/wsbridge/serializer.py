"""Render a preprocessed token stream as delimited text.

The output spells blocks and statement ends with the control glyphs, so a
plain whitespace-insensitive lexer/parser can consume it.
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import lru_cache

from .errors import LexError, UnbalancedStream
from .lexer import LexerConfig, lex
from .tokens import ControlTokenConfig, Token, TokenKind, render_token

_DROPPED = frozenset({TokenKind.WS, TokenKind.COMMENT, TokenKind.LINE_CONT})


def delimited_config(cfg: ControlTokenConfig = ControlTokenConfig(), **kw) -> LexerConfig:
    return LexerConfig(control_tokens=cfg, recognize_control_glyphs=True, **kw)


@lru_cache(maxsize=4096)
def _needs_space(left: str, right: str, cfg: ControlTokenConfig) -> bool:
    # "1" "." "5" is fine pairwise but fuses into a float as a triple
    if (left[-1].isdigit() and right == ".") or (left == "." and right[0].isdigit()):
        return True
    try:
        toks = lex(left + right, delimited_config(cfg))
    except LexError:
        return True
    return [t.lexeme for t in toks[:-1]] != [left, right]


def check_balance(stream: Iterable[Token]) -> None:
    depth = 0
    for t in stream:
        if t.kind is TokenKind.BLOCK_START:
            depth += 1
        elif t.kind is TokenKind.BLOCK_END:
            depth -= 1
            if depth < 0:
                raise UnbalancedStream("BLOCK_END without matching BLOCK_START", t.pos)
    if depth:
        raise UnbalancedStream(f"{depth} block(s) left open at end of stream")


def render_delimited(stream: Iterable[Token], cfg: ControlTokenConfig = ControlTokenConfig()) -> str:
    tokens = list(stream)
    check_balance(tokens)
    out: list[str] = []
    prev = None
    for t in tokens:
        kind = t.kind
        if kind is TokenKind.EOF:
            break
        if kind in _DROPPED:
            continue
        if kind is TokenKind.NEWLINE:
            out.append("\n")
            prev = None
            continue
        text = render_token(t, cfg)
        if prev is not None and _needs_space(prev, text, cfg):
            out.append(" ")
        out.append(text)
        prev = text
    return "".join(out)

"""Indentation preprocessor: turns layout into BLOCK_START/BLOCK_END/STMT_END.

An explicit stack of open indentation columns replaces a scalar "old
indent", so a single dedent can close several blocks at once.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Protocol

from .errors import IndentMismatch, TabsDisallowed
from .tokens import Channel, IndentPolicy, SourcePos, Token, TokenKind

END_OF_INPUT = None


class Lookahead(Protocol):
    def peek(self, k: int = 0) -> Token: ...


@dataclass(frozen=True, slots=True)
class IndentState:
    indent_stack: tuple[int, ...] = (0,)
    pending_line_continuation: bool = False
    content_since_boundary: bool = False
    # last default-channel token emitted was a lexed ';'
    explicit_stmt_end: bool = False

    @property
    def block_depth(self) -> int:
        return len(self.indent_stack) - 1


def indent_width(ws: str, policy: IndentPolicy, pos: SourcePos | None = None) -> int:
    col = 0
    for ch in ws:
        if ch == "\t":
            if not policy.allow_tabs:
                raise TabsDisallowed("tab in leading whitespace", pos)
            col += policy.tab_stop - col % policy.tab_stop
        else:
            col += 1
    return col


def calc_current_indent(stream: Lookahead, policy: IndentPolicy = IndentPolicy()) -> int | None:
    """Peek past blank and comment-only lines; return the next content line's indent.

    Returns ``END_OF_INPUT`` (None) when only EOF remains. Nothing is consumed.
    """
    k = 0
    leading = ""
    leading_pos = None
    at_line_start = True
    while True:
        t = stream.peek(k)
        kind = t.kind
        if kind is TokenKind.EOF:
            return END_OF_INPUT
        if kind is TokenKind.NEWLINE:
            leading, leading_pos, at_line_start = "", None, True
        elif kind is TokenKind.WS:
            if at_line_start:
                leading, leading_pos = t.lexeme, t.pos
            at_line_start = False
        elif kind is TokenKind.COMMENT:
            at_line_start = False
        else:
            return indent_width(leading, policy, leading_pos or t.pos)
        k += 1


def _line_start(stream: Lookahead) -> SourcePos:
    """Position (line, 0) of the next content line, for diagnostics."""
    k = 0
    while True:
        t = stream.peek(k)
        if t.kind not in (TokenKind.NEWLINE, TokenKind.WS, TokenKind.COMMENT):
            return SourcePos(t.pos.line, 0)
        k += 1


def check_first_line(stream: Lookahead, policy: IndentPolicy = IndentPolicy()) -> None:
    """The first content line must start at column 0."""
    n = calc_current_indent(stream, policy)
    if n:
        raise IndentMismatch("unexpected indent on first line", _line_start(stream))


def process(
    t: Token,
    st: IndentState,
    lookahead: Lookahead,
    policy: IndentPolicy = IndentPolicy(),
) -> tuple[list[Token], IndentState]:
    """Handle one token routed to the preprocessor.

    ``lookahead`` must be positioned just after ``t``.
    """
    kind = t.kind

    if kind is TokenKind.LINE_CONT:
        return [], replace(st, pending_line_continuation=True)

    if kind is TokenKind.NEWLINE:
        if st.pending_line_continuation:
            return [], replace(st, pending_line_continuation=False)
        if not st.content_since_boundary:
            return [t], st
        out: list[Token] = []
        stack = st.indent_stack
        n = calc_current_indent(lookahead, policy)
        if n is END_OF_INPUT or n == stack[-1]:
            if not st.explicit_stmt_end:
                out.append(Token.synth(TokenKind.STMT_END, t))
        elif n > stack[-1]:
            stack = stack + (n,)
            out.append(Token.synth(TokenKind.BLOCK_START, t))
        else:
            if not st.explicit_stmt_end:
                out.append(Token.synth(TokenKind.STMT_END, t))
            while n < stack[-1]:
                stack = stack[:-1]
                out.append(Token.synth(TokenKind.BLOCK_END, t))
            if n != stack[-1]:
                raise IndentMismatch(
                    f"dedent to column {n} matches no enclosing block", _line_start(lookahead)
                )
        out.append(t)
        return out, IndentState(stack, False, False, False)

    if kind is TokenKind.EOF:
        out = []
        if st.content_since_boundary and not st.explicit_stmt_end:
            out.append(Token.synth(TokenKind.STMT_END, t))
        out.extend(Token.synth(TokenKind.BLOCK_END, t) for _ in range(st.block_depth))
        out.append(t)
        return out, IndentState()

    if t.channel is Channel.HIDDEN:
        return [t], st

    if kind is TokenKind.STMT_END:
        return [t], replace(st, content_since_boundary=True, explicit_stmt_end=True)
    if st.content_since_boundary and not st.explicit_stmt_end:
        return [t], st
    return [t], replace(st, content_since_boundary=True, explicit_stmt_end=False)

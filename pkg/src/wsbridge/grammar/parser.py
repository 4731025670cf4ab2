"""Whitespace-insensitive parser driven by a ComponentRegistry.

Statements dispatch on their leading token; expressions use Pratt-style
binding powers from the registry's prefix/infix tables.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Optional

from .. import nodes as ast
from ..errors import NoStatementParser, ParseError
from ..tokens import Kind, SourcePos, Token, TokenKind
from .registry import ComponentRegistry


def _describe(t: Token) -> str:
    if t.kind is TokenKind.EOF:
        return "end of input"
    if t.lexeme:
        return f"{t.kind.name} {t.lexeme!r}"
    return t.kind.name


class Parser:
    def __init__(self, tokens: Iterable[Token], registry: ComponentRegistry) -> None:
        # hidden tokens are skipped so raw lexer output in delimited form works too
        self._it = (t for t in tokens if not t.hidden)
        self.reg = registry
        self.ctl = registry.control_bindings
        self._tok: Token = next(self._it)
        self.last: Optional[Token] = None

    # token access

    def peek(self) -> Token:
        return self._tok

    def at(self, *kinds: Kind) -> bool:
        return self._tok.kind in kinds

    def advance(self) -> Token:
        tok = self._tok
        if tok.kind is not TokenKind.EOF:
            self._tok = next(self._it)
        self.last = tok
        return tok

    def expect(self, kind: Kind, what: str | None = None) -> Token:
        tok = self._tok
        if tok.kind != kind:
            raise self.error((what or kind.name,))
        return self.advance()

    def accept(self, kind: Kind) -> Optional[Token]:
        return self.advance() if self._tok.kind == kind else None

    def error(self, expected: tuple[str, ...], cls: type[ParseError] = ParseError) -> ParseError:
        tok = self._tok
        msg = f"expected {' or '.join(expected)}, found {_describe(tok)}"
        return cls(msg, tok.pos, expected=expected, found=tok)

    def span_from(self, start: SourcePos) -> ast.Span:
        end = self.last.end if self.last is not None else start
        return ast.Span(start, max(start, end))

    # extension points

    def end_statement(self) -> Token:
        return self.expect(self.ctl.end_stmt)

    def block(self) -> ast.Block:
        """``StartBlock Statement+ EndBlock`` or one inline statement."""
        start = self._tok.pos
        if self.accept(self.ctl.start_block):
            stmts = [self.statement()]
            while not self.at(self.ctl.end_block):
                if self.at(TokenKind.EOF):
                    raise self.error((self.ctl.end_block.name,))
                stmts.append(self.statement())
            self.advance()
            return ast.Block(tuple(stmts), span=self.span_from(start))
        if self.at(self.ctl.end_stmt, self.ctl.end_block, TokenKind.EOF):
            raise self.error((self.ctl.start_block.name, "statement"))
        stmt = self.statement()
        return ast.Block((stmt,), span=stmt.span)

    # statements

    def statement(self) -> ast.Stmt:
        tok = self._tok
        rule = self.reg.statement_for(tok.kind)
        if rule is not None:
            return rule.parse(self)
        if tok.kind not in self.reg.expression_prefix_rules:
            raise NoStatementParser(
                f"no statement parser for {_describe(tok)}", tok.pos,
                expected=("statement",), found=tok,
            )
        if self.reg.fallback is not None:
            return self.reg.fallback(self)
        start = tok.pos
        expr = self.expression()
        self.end_statement()
        return ast.ExprStmt(expr, span=self.span_from(start))

    def module(self) -> ast.Module:
        start = self._tok.pos
        body = []
        while not self.at(TokenKind.EOF):
            body.append(self.statement())
        return ast.Module(tuple(body), span=self.span_from(start))

    # expressions

    def expression(self, rbp: int = 0) -> ast.Expr:
        rule = self.reg.expression_prefix_rules.get(self._tok.kind)
        if rule is None:
            raise self.error(("expression",))
        left = rule(self, self.advance())
        infix = self.reg.expression_infix_rules
        while True:
            entry = infix.get(self._tok.kind)
            if entry is None or entry.binding_power <= rbp:
                return left
            left = entry.parse(self, left, self.advance())


def parse_module(tokens: Iterable[Token], registry: ComponentRegistry) -> ast.Module:
    return Parser(tokens, registry).module()

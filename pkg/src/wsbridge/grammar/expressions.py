"""Whitespace-insensitive expression components (names, literals, C-style operators).

None of these rules mention layout or control tokens, which is what makes
them reusable unchanged in an indentation-sensitive language.
"""

from __future__ import annotations

from collections.abc import Callable

from .. import nodes as ast
from ..errors import ParseError
from ..tokens import Kind, Token, TokenKind as K
from .parser import Parser
from .registry import Component

OR, AND, NOT, COMPARE, ADDITIVE, MULTIPLICATIVE, UNARY, POWER, POSTFIX = (
    10, 20, 30, 40, 50, 60, 70, 80, 90,
)


def _span(p: Parser, node_or_tok: ast.Node | Token) -> ast.Span:
    start = node_or_tok.span.start if isinstance(node_or_tok, ast.Node) else node_or_tok.pos
    return p.span_from(start)


def comma_list(p: Parser, close: Kind, item: Callable[[Parser], object]) -> tuple[list, bool]:
    """Items up to ``close`` (consumed); returns (items, saw_trailing_comma)."""
    items = []
    trailing = False
    while not p.at(close):
        items.append(item(p))
        trailing = bool(p.accept(K.COMMA))
        if not trailing:
            break
    p.expect(close)
    return items, trailing


# Basics

Basics = Component("Basics")


@Basics.prefix_rule(K.NAME)
def _name(p: Parser, tok: Token) -> ast.Expr:
    return ast.Name(tok.lexeme, span=_span(p, tok))


# CommonLiterals

CommonLiterals = Component("CommonLiterals")


@CommonLiterals.prefix_rule(K.INT)
def _int(p: Parser, tok: Token) -> ast.Expr:
    return ast.IntLit(int(tok.lexeme), span=_span(p, tok))


@CommonLiterals.prefix_rule(K.FLOAT)
def _float(p: Parser, tok: Token) -> ast.Expr:
    return ast.FloatLit(float(tok.lexeme), span=_span(p, tok))


@CommonLiterals.prefix_rule(K.STRING)
def _string(p: Parser, tok: Token) -> ast.Expr:
    return ast.StrLit(tok.lexeme, span=_span(p, tok))


@CommonLiterals.prefix_rule(K.TRUE, K.FALSE)
def _bool(p: Parser, tok: Token) -> ast.Expr:
    return ast.BoolLit(tok.kind is K.TRUE, span=_span(p, tok))


@CommonLiterals.prefix_rule(K.NONE)
def _none(p: Parser, tok: Token) -> ast.Expr:
    return ast.NoneLit(span=_span(p, tok))


# CommonExpressions

CommonExpressions = Component("CommonExpressions")


@CommonExpressions.prefix_rule(K.MINUS, K.PLUS, K.PLUSPLUS)
def _unary(p: Parser, tok: Token) -> ast.Expr:
    operand = p.expression(UNARY)
    return ast.Unary(tok.lexeme, operand, span=_span(p, tok))


@CommonExpressions.prefix_rule(K.NOT)
def _not(p: Parser, tok: Token) -> ast.Expr:
    operand = p.expression(NOT)
    return ast.Unary("not", operand, span=_span(p, tok))


@CommonExpressions.prefix_rule(K.LPAREN)
def _paren(p: Parser, tok: Token) -> ast.Expr:
    if p.accept(K.RPAREN):
        return ast.TupleDisplay((), span=_span(p, tok))
    first = p.expression()
    if not p.accept(K.COMMA):
        p.expect(K.RPAREN)
        return ast.Paren(first, span=_span(p, tok))
    rest, _ = comma_list(p, K.RPAREN, Parser.expression)
    return ast.TupleDisplay((first, *rest), span=_span(p, tok))


@CommonExpressions.prefix_rule(K.LBRACKET)
def _list(p: Parser, tok: Token) -> ast.Expr:
    items, _ = comma_list(p, K.RBRACKET, Parser.expression)
    return ast.ListDisplay(tuple(items), span=_span(p, tok))


def _dict_pair(p: Parser) -> tuple[ast.Expr, ast.Expr]:
    key = p.expression()
    p.expect(K.COLON)
    return key, p.expression()


@CommonExpressions.prefix_rule(K.LBRACE)
def _dict(p: Parser, tok: Token) -> ast.Expr:
    pairs, _ = comma_list(p, K.RBRACE, _dict_pair)
    return ast.DictDisplay(tuple(pairs), span=_span(p, tok))


def _left_assoc(bp: int):
    def led(p: Parser, left: ast.Expr, tok: Token) -> ast.Expr:
        right = p.expression(bp)
        return ast.Binary(tok.lexeme, left, right, span=_span(p, left))
    return led


CommonExpressions.infix_rule(OR, K.OR)(_left_assoc(OR))
CommonExpressions.infix_rule(AND, K.AND)(_left_assoc(AND))
CommonExpressions.infix_rule(ADDITIVE, K.PLUS, K.MINUS)(_left_assoc(ADDITIVE))
CommonExpressions.infix_rule(MULTIPLICATIVE, K.STAR, K.SLASH, K.DOUBLESLASH, K.PERCENT)(
    _left_assoc(MULTIPLICATIVE)
)

_COMPARISONS = (K.EQ, K.NE, K.LT, K.GT, K.LE, K.GE)


@CommonExpressions.infix_rule(COMPARE, *_COMPARISONS)
def _compare(p: Parser, left: ast.Expr, tok: Token) -> ast.Expr:
    right = p.expression(COMPARE)
    if p.at(*_COMPARISONS):
        raise ParseError(
            "chained comparisons are not supported", p.peek().pos,
            expected=("end of comparison",), found=p.peek(),
        )
    return ast.Compare(left, tok.lexeme, right, span=_span(p, left))


@CommonExpressions.infix_rule(POWER, K.DOUBLESTAR)
def _power(p: Parser, left: ast.Expr, tok: Token) -> ast.Expr:
    right = p.expression(POWER - 1)
    return ast.Binary("**", left, right, span=_span(p, left))


@CommonExpressions.infix_rule(POSTFIX, K.LPAREN)
def _call(p: Parser, left: ast.Expr, tok: Token) -> ast.Expr:
    args, _ = comma_list(p, K.RPAREN, Parser.expression)
    return ast.Call(left, tuple(args), span=_span(p, left))


@CommonExpressions.infix_rule(POSTFIX, K.DOT)
def _attribute(p: Parser, left: ast.Expr, tok: Token) -> ast.Expr:
    name = p.expect(K.NAME, "attribute name")
    return ast.Attribute(left, name.lexeme, span=_span(p, left))


@CommonExpressions.infix_rule(POSTFIX, K.LBRACKET)
def _subscript(p: Parser, left: ast.Expr, tok: Token) -> ast.Expr:
    index = p.expression()
    p.expect(K.RBRACKET)
    return ast.Subscript(left, index, span=_span(p, left))


@CommonExpressions.infix_rule(POSTFIX, K.PLUSPLUS)
def _inc_suffix(p: Parser, left: ast.Expr, tok: Token) -> ast.Expr:
    return ast.IncSuffix(left, span=_span(p, left))

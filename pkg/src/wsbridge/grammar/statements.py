"""Statement components written against the block/statement extension points."""

from __future__ import annotations

from .. import nodes as ast
from ..errors import ParseError
from ..tokens import TokenKind as K
from .expressions import comma_list
from .parser import Parser
from .registry import Component

BasicStatements = Component("BasicStatements")
PyStatements = Component("PyStatements")


def _simple(p: Parser, node_type: type[ast.Stmt]) -> ast.Stmt:
    start = p.advance().pos
    p.end_statement()
    return node_type(span=p.span_from(start))


@BasicStatements.statement("IfStatement", K.IF)
def if_statement(p: Parser) -> ast.Stmt:
    start = p.advance().pos
    cond = p.expression()
    p.expect(K.COLON)
    then = p.block()
    elifs = []
    while p.accept(K.ELIF):
        c = p.expression()
        p.expect(K.COLON)
        elifs.append((c, p.block()))
    orelse = None
    if p.accept(K.ELSE):
        p.expect(K.COLON)
        orelse = p.block()
    return ast.If(cond, then, tuple(elifs), orelse, span=p.span_from(start))


@BasicStatements.statement("WhileStatement", K.WHILE)
def while_statement(p: Parser) -> ast.Stmt:
    start = p.advance().pos
    cond = p.expression()
    p.expect(K.COLON)
    return ast.While(cond, p.block(), span=p.span_from(start))


@BasicStatements.statement("ReturnStatement", K.RETURN)
def return_statement(p: Parser) -> ast.Stmt:
    start = p.advance().pos
    value = None
    if not p.at(p.ctl.end_stmt):
        value = p.expression()
    p.end_statement()
    return ast.Return(value, span=p.span_from(start))


@BasicStatements.statement("PassStatement", K.PASS)
def pass_statement(p: Parser) -> ast.Stmt:
    return _simple(p, ast.Pass)


@BasicStatements.statement("BreakStatement", K.BREAK)
def break_statement(p: Parser) -> ast.Stmt:
    return _simple(p, ast.Break)


@BasicStatements.statement("ContinueStatement", K.CONTINUE)
def continue_statement(p: Parser) -> ast.Stmt:
    return _simple(p, ast.Continue)


def _assignable(e: ast.Expr, augmented: bool = False) -> bool:
    if isinstance(e, (ast.Name, ast.Attribute, ast.Subscript)):
        return True
    if augmented:
        return False
    if isinstance(e, ast.Paren):
        return _assignable(e.expr)
    if isinstance(e, (ast.TupleDisplay, ast.ListDisplay)):
        return all(_assignable(i) for i in e.items)
    return False


def _check_target(p: Parser, e: ast.Expr, augmented: bool = False) -> None:
    if not _assignable(e, augmented):
        raise ParseError(
            f"cannot assign to {type(e).__name__}", e.span.start, expected=("assignment target",)
        )


def expr_or_assign(p: Parser) -> ast.Stmt:
    start = p.peek().pos
    first = p.expression()
    if p.at(K.PLUSASSIGN, K.MINUSASSIGN):
        op = p.advance().lexeme
        _check_target(p, first, augmented=True)
        value = p.expression()
        p.end_statement()
        return ast.Assign((first,), value, op, span=p.span_from(start))
    if p.at(K.ASSIGN):
        chain = [first]
        while p.accept(K.ASSIGN):
            chain.append(p.expression())
        *targets, value = chain
        for t in targets:
            _check_target(p, t)
        p.end_statement()
        return ast.Assign(tuple(targets), value, "=", span=p.span_from(start))
    p.end_statement()
    return ast.ExprStmt(first, span=p.span_from(start))


BasicStatements.fallback = expr_or_assign


@PyStatements.statement("ForStatement", K.FOR)
def for_statement(p: Parser) -> ast.Stmt:
    start = p.advance().pos
    target = p.expression()
    _check_target(p, target)
    p.expect(K.IN)
    iterable = p.expression()
    p.expect(K.COLON)
    return ast.For(target, iterable, p.block(), span=p.span_from(start))


def _param(p: Parser) -> str:
    return p.expect(K.NAME, "parameter name").lexeme


@PyStatements.statement("FunctionDefinition", K.DEF)
def funcdef_statement(p: Parser) -> ast.Stmt:
    start = p.advance().pos
    name = p.expect(K.NAME, "function name").lexeme
    p.expect(K.LPAREN)
    params, _ = comma_list(p, K.RPAREN, _param)
    if len(set(params)) != len(params):
        raise ParseError(f"duplicate parameter in {name}", start, expected=("distinct parameters",))
    p.expect(K.COLON)
    return ast.FuncDef(name, tuple(params), p.block(), span=p.span_from(start))


@PyStatements.statement("ImportStatement", K.IMPORT)
def import_statement(p: Parser) -> ast.Stmt:
    start = p.advance().pos
    parts = [p.expect(K.NAME, "module name").lexeme]
    while p.accept(K.DOT):
        parts.append(p.expect(K.NAME, "module name").lexeme)
    p.end_statement()
    return ast.Import(".".join(parts), span=p.span_from(start))

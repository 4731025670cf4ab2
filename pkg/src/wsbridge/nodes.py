"""Mini-Python abstract syntax.

Spans are excluded from ``==`` so two trees compare structurally; use
:func:`to_json` when spans matter.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterator
from dataclasses import dataclass, field, fields
from typing import Any, Optional

from .tokens import SourcePos


@dataclass(frozen=True, slots=True)
class Span:
    start: SourcePos
    end: SourcePos

    def contains(self, other: Span) -> bool:
        return self.start <= other.start and other.end <= self.end


NO_SPAN = Span(SourcePos(1, 0), SourcePos(1, 0))


@dataclass(frozen=True)
class Node:
    span: Span = field(default=NO_SPAN, compare=False, repr=False, kw_only=True)

    def children(self) -> Iterator[Node]:
        for f in fields(self):
            if f.name != "span":
                yield from _nodes_in(getattr(self, f.name))

    def walk(self) -> Iterator[Node]:
        yield self
        for c in self.children():
            yield from c.walk()


def _nodes_in(value: Any) -> Iterator[Node]:
    if isinstance(value, Node):
        yield value
    elif isinstance(value, tuple):
        for v in value:
            yield from _nodes_in(v)


# expressions

class Expr(Node):
    pass


@dataclass(frozen=True)
class Name(Expr):
    id: str


@dataclass(frozen=True)
class IntLit(Expr):
    value: int


@dataclass(frozen=True)
class FloatLit(Expr):
    value: float


@dataclass(frozen=True)
class StrLit(Expr):
    raw: str  # source lexeme including quotes


@dataclass(frozen=True)
class BoolLit(Expr):
    value: bool


@dataclass(frozen=True)
class NoneLit(Expr):
    pass


@dataclass(frozen=True)
class Unary(Expr):
    op: str  # "-", "+", "not", "++"
    operand: Expr


@dataclass(frozen=True)
class IncSuffix(Expr):
    operand: Expr


@dataclass(frozen=True)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Compare(Expr):
    left: Expr
    op: str
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    fn: Expr
    args: tuple[Expr, ...]


@dataclass(frozen=True)
class Attribute(Expr):
    obj: Expr
    name: str


@dataclass(frozen=True)
class Subscript(Expr):
    obj: Expr
    index: Expr


@dataclass(frozen=True)
class ListDisplay(Expr):
    items: tuple[Expr, ...]


@dataclass(frozen=True)
class TupleDisplay(Expr):
    items: tuple[Expr, ...]


@dataclass(frozen=True)
class DictDisplay(Expr):
    pairs: tuple[tuple[Expr, Expr], ...]


@dataclass(frozen=True)
class Paren(Expr):
    expr: Expr


# statements

class Stmt(Node):
    pass


@dataclass(frozen=True)
class Block(Node):
    stmts: tuple[Stmt, ...]


@dataclass(frozen=True)
class ExprStmt(Stmt):
    expr: Expr


@dataclass(frozen=True)
class Assign(Stmt):
    targets: tuple[Expr, ...]
    value: Expr
    op: str = "="


@dataclass(frozen=True)
class If(Stmt):
    cond: Expr
    then: Block
    elifs: tuple[tuple[Expr, Block], ...] = ()
    orelse: Optional[Block] = None


@dataclass(frozen=True)
class While(Stmt):
    cond: Expr
    body: Block


@dataclass(frozen=True)
class For(Stmt):
    target: Expr
    iter: Expr
    body: Block


@dataclass(frozen=True)
class FuncDef(Stmt):
    name: str
    params: tuple[str, ...]
    body: Block


@dataclass(frozen=True)
class Return(Stmt):
    value: Optional[Expr] = None


@dataclass(frozen=True)
class Pass(Stmt):
    pass


@dataclass(frozen=True)
class Break(Stmt):
    pass


@dataclass(frozen=True)
class Continue(Stmt):
    pass


@dataclass(frozen=True)
class Import(Stmt):
    name: str  # dotted


@dataclass(frozen=True)
class Module(Node):
    body: tuple[Stmt, ...]


# serialization

def _pos(p: SourcePos) -> list[int]:
    return [p.line, p.column]


def to_data(value: Any) -> Any:
    """Plain JSON-ready data: ``{"type": ..., <fields>, "span": [[l, c], [l, c]]}``."""
    if isinstance(value, Node):
        out: dict[str, Any] = {"type": type(value).__name__}
        for f in fields(value):
            if f.name != "span":
                out[f.name] = to_data(getattr(value, f.name))
        out["span"] = [_pos(value.span.start), _pos(value.span.end)]
        return out
    if isinstance(value, tuple):
        return [to_data(v) for v in value]
    return value


def to_json(node: Node, indent: int | None = 2) -> str:
    return json.dumps(to_data(node), indent=indent, ensure_ascii=False)


_BARE = re.compile(r'[^\s()"#;]+')


def _atom(value: Any) -> str:
    if value is None:
        return "nil"
    if isinstance(value, bool):
        return "#t" if value else "#f"
    if isinstance(value, (int, float)):
        return repr(value)
    if _BARE.fullmatch(value):
        return value
    return json.dumps(value, ensure_ascii=False)


def to_sexpr(value: Any) -> str:
    """Compact span-free form, e.g. ``(Module ((Assign = ((Name x)) (IntLit 1))))``."""
    if isinstance(value, Node):
        parts = [type(value).__name__]
        if isinstance(value, Assign):
            parts += [value.op, to_sexpr(value.targets), to_sexpr(value.value)]
        else:
            parts += [to_sexpr(getattr(value, f.name)) for f in fields(value) if f.name != "span"]
        return "(" + " ".join(parts) + ")"
    if isinstance(value, tuple):
        return "(" + " ".join(to_sexpr(v) for v in value) + ")"
    return _atom(value)

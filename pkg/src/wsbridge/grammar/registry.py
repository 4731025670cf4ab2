"""Composable grammar components and the registry they compose into.

A component contributes statement parsers (keyed by their leading token),
Pratt prefix/infix rules and, optionally, keywords. Blocks and statement
ends are written against the extension points ``start_block``,
``end_block`` and ``end_stmt``; the composing language binds them to
concrete token kinds.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import TYPE_CHECKING, Any, Optional

from ..errors import CompositionConflict
from ..tokens import ControlTokenConfig, Kind, TokenKind

if TYPE_CHECKING:
    from .parser import Parser

StmtParse = Callable[["Parser"], Any]
PrefixParse = Callable[["Parser", Any], Any]
InfixParse = Callable[["Parser", Any, Any], Any]


@dataclass(frozen=True)
class StatementRule:
    name: str
    heads: frozenset[Kind]
    parse: StmtParse

    def claims(self, kind: Kind) -> bool:
        return kind in self.heads


@dataclass(frozen=True)
class InfixRule:
    binding_power: int
    parse: InfixParse


@dataclass(frozen=True)
class ControlBindings:
    start_block: Kind = TokenKind.BLOCK_START
    end_block: Kind = TokenKind.BLOCK_END
    end_stmt: Kind = TokenKind.STMT_END

    def __post_init__(self) -> None:
        if len({self.start_block, self.end_block, self.end_stmt}) != 3:
            raise CompositionConflict("control bindings must be pairwise distinct")


@dataclass
class Component:
    """A named bundle of grammar rules; build one, then register rules on it."""

    name: str
    statements: list[StatementRule] = field(default_factory=list)
    prefix: dict[Kind, PrefixParse] = field(default_factory=dict)
    infix: dict[Kind, InfixRule] = field(default_factory=dict)
    keywords: dict[str, Kind] = field(default_factory=dict)
    fallback: Optional[StmtParse] = None

    def statement(self, name: str, *heads: Kind) -> Callable[[StmtParse], StmtParse]:
        def register(fn: StmtParse) -> StmtParse:
            self.statements.append(StatementRule(name, frozenset(heads), fn))
            return fn
        return register

    def prefix_rule(self, *kinds: Kind) -> Callable[[PrefixParse], PrefixParse]:
        def register(fn: PrefixParse) -> PrefixParse:
            for k in kinds:
                if k in self.prefix:
                    raise CompositionConflict(f"{self.name}: duplicate prefix rule for {k.name}")
                self.prefix[k] = fn
            return fn
        return register

    def infix_rule(self, bp: int, *kinds: Kind) -> Callable[[InfixParse], InfixParse]:
        def register(fn: InfixParse) -> InfixParse:
            for k in kinds:
                if k in self.infix:
                    raise CompositionConflict(f"{self.name}: duplicate infix rule for {k.name}")
                self.infix[k] = InfixRule(bp, fn)
            return fn
        return register


@dataclass(frozen=True)
class ComponentRegistry:
    statement_parsers: tuple[StatementRule, ...]
    expression_prefix_rules: Mapping[Kind, PrefixParse]
    expression_infix_rules: Mapping[Kind, InfixRule]
    control_bindings: ControlBindings
    keywords: Mapping[str, Kind]
    fallback: Optional[StmtParse]
    components: tuple[str, ...]
    control_tokens: ControlTokenConfig = ControlTokenConfig()

    def __post_init__(self) -> None:
        heads = {}
        for rule in self.statement_parsers:
            for k in rule.heads:
                heads[k] = rule
        object.__setattr__(self, "_by_head", MappingProxyType(heads))

    def statement_for(self, kind: Kind) -> Optional[StatementRule]:
        return self._by_head.get(kind)  # type: ignore[attr-defined]


def compose(
    components: Iterable[Component],
    bindings: ControlBindings = ControlBindings(),
    control_tokens: ControlTokenConfig = ControlTokenConfig(),
) -> ComponentRegistry:
    """Merge components into a registry; any overlapping claim is a CompositionConflict."""
    statements: list[StatementRule] = []
    claimed: dict[Kind, str] = {}
    prefix: dict[Kind, PrefixParse] = {}
    prefix_owner: dict[Kind, str] = {}
    infix: dict[Kind, InfixRule] = {}
    infix_owner: dict[Kind, str] = {}
    keywords: dict[str, Kind] = {}
    fallback: Optional[StmtParse] = None
    fallback_owner = ""
    names: list[str] = []

    for comp in components:
        names.append(comp.name)
        for rule in comp.statements:
            for k in rule.heads:
                if k in claimed:
                    raise CompositionConflict(
                        f"{comp.name}.{rule.name} and {claimed[k]} both claim leading token {k.name}"
                    )
                claimed[k] = f"{comp.name}.{rule.name}"
            statements.append(rule)
        for k, fn in comp.prefix.items():
            if k in prefix_owner:
                raise CompositionConflict(
                    f"{comp.name} and {prefix_owner[k]} both define a prefix rule for {k.name}"
                )
            prefix_owner[k] = comp.name
            prefix[k] = fn
        for k, rule in comp.infix.items():
            if k in infix_owner:
                raise CompositionConflict(
                    f"{comp.name} and {infix_owner[k]} both define an infix rule for {k.name}"
                )
            infix_owner[k] = comp.name
            infix[k] = rule
        for word, k in comp.keywords.items():
            if keywords.get(word, k) != k:
                raise CompositionConflict(f"{comp.name} redefines keyword {word!r}")
            keywords[word] = k
        if comp.fallback is not None:
            if fallback is not None:
                raise CompositionConflict(
                    f"{comp.name} and {fallback_owner} both define a fallback statement"
                )
            fallback, fallback_owner = comp.fallback, comp.name

    return ComponentRegistry(
        statement_parsers=tuple(statements),
        expression_prefix_rules=MappingProxyType(prefix),
        expression_infix_rules=MappingProxyType(infix),
        control_bindings=bindings,
        keywords=MappingProxyType(keywords),
        fallback=fallback,
        components=tuple(names),
        control_tokens=control_tokens,
    )

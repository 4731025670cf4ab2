"""Helpers shared by the test modules: program generator, toy language, adapters."""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from wsbridge import nodes as ast
from wsbridge.grammar import Component, compose
from wsbridge.grammar.expressions import Basics, CommonExpressions, CommonLiterals
from wsbridge.lexer import LexerConfig
from wsbridge.tokens import CONTROL_KINDS, DeclaredKind, TokenKind

ROOT = Path(__file__).resolve().parent.parent
POSITIVE = ROOT / "corpus" / "positive"
NEGATIVE = ROOT / "corpus" / "negative"

# A print/if toy program with a tab-indented body.
TOY_PROGRAM = 'print "Hello"\nif 1 < 2:\n\tprint " world"\n'

# a call spread over lines with arbitrary indentation
BRACKETED_CALL = 'print(\n\t"Hello",\n\t\t"World",\n"!"\n)\n'


def positive_files() -> list[Path]:
    return sorted(POSITIVE.glob("*.mpy"))


def negative_files() -> list[Path]:
    return sorted(NEGATIVE.glob("*.mpy"))


def read(path: Path) -> str:
    with open(path, encoding="utf-8", newline="") as f:
        return f.read()


# toy language: Program = Statement*; Statement = PrintStatement | IfStatement

PRINT = DeclaredKind("PRINT")


@dataclass(frozen=True)
class PrintStmt(ast.Stmt):
    text: str


ToyStatements = Component("ToyStatements", keywords={"print": PRINT})


@ToyStatements.statement("PrintStatement", PRINT)
def _print(p):
    start = p.advance().pos
    s = p.expect(TokenKind.STRING)
    p.end_statement()
    return PrintStmt(s.lexeme, span=p.span_from(start))


@ToyStatements.statement("IfStatement", TokenKind.IF)
def _if(p):
    # IF Expression COLON BLOCK_START Statement+ BLOCK_END -- no inline form
    start = p.advance().pos
    cond = p.expression()
    p.expect(TokenKind.COLON)
    p.expect(p.ctl.start_block)
    body = [p.statement()]
    while not p.at(p.ctl.end_block):
        body.append(p.statement())
    p.advance()
    return ast.If(cond, ast.Block(tuple(body)), span=p.span_from(start))


def toy_registry():
    return compose([Basics, CommonLiterals, CommonExpressions, ToyStatements])


def toy_lexer_config() -> LexerConfig:
    return LexerConfig(extra_keywords=dict(toy_registry().keywords))


# boundary events in the oracle's vocabulary

def boundary_events(stream) -> list:
    events: list = []
    n = 0
    for t in stream:
        if t.hidden or t.kind is TokenKind.EOF:
            continue
        if t.kind in CONTROL_KINDS:
            if n:
                events.append(("CONTENT", n))
                n = 0
            events.append(t.kind.name)
        else:
            n += 1
    if n:
        events.append(("CONTENT", n))
    return events


# random indentation-only programs

_NAMES = ["a", "b", "count", "total", "x1", "flag", "value"]


def _arith(rng: random.Random, depth: int = 0) -> str:
    r = rng.random()
    if depth > 2 or r < 0.45:
        return rng.choice(_NAMES) if rng.random() < 0.6 else str(rng.randint(0, 99))
    if r < 0.6:
        return f"f({_arith(rng, depth + 1)})"
    if r < 0.7:
        return f"({_arith(rng, depth + 1)})"
    op = rng.choice(["+", "-", "*", "//", "%"])
    return f"{_arith(rng, depth + 1)} {op} {_arith(rng, depth + 1)}"


def _expr(rng: random.Random) -> str:
    r = rng.random()
    if r < 0.5:
        return _arith(rng)
    cmp = f"{_arith(rng, 1)} {rng.choice(['==', '<', '>=', '!='])} {_arith(rng, 1)}"
    if r < 0.75:
        return cmp
    if r < 0.85:
        return f"not {cmp}"
    return f"{cmp} {rng.choice(['and', 'or'])} {_arith(rng, 1)}"


class ProgramGenerator:
    """Random Mini-Python programs whose structure is carried by indentation.

    With ``brackets=True`` the output also contains multi-line bracketed
    expressions and triple-quoted strings; otherwise only the pure
    indentation fragment (plus backslash continuations) is produced.
    """

    def __init__(self, seed: int, max_depth: int = 6, brackets: bool = False) -> None:
        self.rng = random.Random(seed)
        self.max_depth = max_depth
        self.brackets = brackets
        self.lines: list[str] = []

    def step(self) -> str:
        return self.rng.choice([" ", "  ", "   ", "    ", "    ", "\t", " \t"])

    def noise(self, indent: str) -> None:
        rng = self.rng
        while rng.random() < 0.15:
            kind = rng.random()
            if kind < 0.4:
                self.lines.append(rng.choice(["", " ", "\t", "      "]))
            else:
                pad = rng.choice(["", indent, " " * rng.randint(0, 12), "\t"])
                self.lines.append(f"{pad}# note {rng.randint(0, 999)}")

    def simple(self, indent: str) -> None:
        rng = self.rng
        r = rng.random()
        target = rng.choice(_NAMES)
        if r < 0.1:
            self.lines.append(indent + rng.choice(["pass", "break", "continue", "return"]))
        elif r < 0.25:
            # backslash continuation, continuation lines at arbitrary indentation
            pad = " " * rng.randint(0, 10)
            self.lines.append(f"{indent}{target} = {_arith(rng)} + \\")
            self.lines.append(f"{pad}{_expr(rng)}")
        elif r < 0.32:
            self.lines.append(f"{indent}{target} = {_expr(rng)}; {rng.choice(_NAMES)} += 1")
        elif self.brackets and r < 0.45:
            pad = " " * rng.randint(0, 10)
            self.lines.append(f"{indent}{target} = g(")
            self.lines.append(f"{pad}{_expr(rng)},")
            self.lines.append(f"{' ' * rng.randint(0, 3)}[{_expr(rng)},")
            self.lines.append(f"{pad}{_expr(rng)}])")
        elif self.brackets and r < 0.52:
            self.lines.append(f'{indent}doc = """first')
            self.lines.append("less indented line")
            self.lines.append(f'{" " * rng.randint(0, 12)}end"""')
        else:
            comment = f"  # c{rng.randint(0, 9)}" if rng.random() < 0.2 else ""
            self.lines.append(f"{indent}{target} = {_expr(rng)}{comment}")

    def block(self, indent: str, depth: int) -> None:
        rng = self.rng
        for _ in range(rng.randint(1, 4)):
            self.noise(indent)
            r = rng.random()
            if depth < self.max_depth and r < 0.4:
                head = rng.choice(["if", "while", "for", "def", "if"])
                if head == "for":
                    self.lines.append(f"{indent}for {rng.choice(_NAMES)} in {_expr(rng)}:")
                elif head == "def":
                    self.lines.append(f"{indent}def fn{rng.randint(0, 99)}(p, q):")
                else:
                    self.lines.append(f"{indent}{head} {_expr(rng)}:")
                inner = indent + self.step()
                self.block(inner, depth + 1)
                if head == "if":
                    while rng.random() < 0.3:
                        self.lines.append(f"{indent}elif {_expr(rng)}:")
                        self.block(indent + self.step(), depth + 1)
                    if rng.random() < 0.3:
                        self.lines.append(f"{indent}else:")
                        self.block(indent + self.step(), depth + 1)
            elif r < 0.5:
                self.lines.append(f"{indent}if {_expr(rng)}: {rng.choice(_NAMES)} = {_expr(rng)}")
            else:
                self.simple(indent)

    def generate(self) -> str:
        self.lines = []
        self.block("", 0)
        self.noise("")
        text = "\n".join(self.lines)
        return text + "\n" if self.rng.random() < 0.9 else text


def generate(seed: int, **kw) -> str:
    return ProgramGenerator(seed, **kw).generate()


def max_nesting(stream) -> int:
    depth = best = 0
    for t in stream:
        if t.kind is TokenKind.BLOCK_START:
            depth += 1
            best = max(best, depth)
        elif t.kind is TokenKind.BLOCK_END:
            depth -= 1
    return best

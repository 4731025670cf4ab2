"""Post-parse context conditions for constructs the reused components accept
but Python does not."""

from __future__ import annotations

from dataclasses import dataclass

from .. import nodes as ast


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    span: ast.Span

    def format(self, path: str) -> str:
        return f"{path}:{self.span.start.line}:{self.span.start.column}: {self.code} {self.message}"


def check_wellformed(module: ast.Module) -> list[Diagnostic]:
    diags = []
    for node in module.walk():
        if isinstance(node, ast.Unary) and node.op == "++":
            diags.append(Diagnostic("WS001", "IncPrefixExpression not allowed", node.span))
        elif isinstance(node, ast.IncSuffix):
            diags.append(Diagnostic("WS001", "IncSuffixExpression not allowed", node.span))
    return diags

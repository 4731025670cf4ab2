from .minipython import COMPONENTS, build_minipython_registry
from .parser import Parser, parse_module
from .registry import (
    Component,
    ComponentRegistry,
    ControlBindings,
    InfixRule,
    StatementRule,
    compose,
)
from .wellformed import Diagnostic, check_wellformed

__all__ = [
    "COMPONENTS",
    "Component",
    "ComponentRegistry",
    "ControlBindings",
    "Diagnostic",
    "InfixRule",
    "Parser",
    "StatementRule",
    "build_minipython_registry",
    "check_wellformed",
    "compose",
    "parse_module",
]

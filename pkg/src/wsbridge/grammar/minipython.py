"""Mini-Python: the reusable components bound to the indentation control tokens."""

from __future__ import annotations

from collections.abc import Iterable

from ..tokens import ControlTokenConfig
from .expressions import Basics, CommonExpressions, CommonLiterals
from .registry import Component, ComponentRegistry, ControlBindings, compose
from .statements import BasicStatements, PyStatements

COMPONENTS: dict[str, Component] = {
    c.name: c
    for c in (Basics, CommonLiterals, CommonExpressions, BasicStatements, PyStatements)
}


def build_minipython_registry(
    cfg: ControlTokenConfig = ControlTokenConfig(),
    *,
    without: Iterable[str] = (),
    extra: Iterable[Component] = (),
) -> ComponentRegistry:
    """Compose the Mini-Python language.

    ``without`` drops named components (used to check modularity), ``extra``
    appends further components after the standard ones.
    """
    skip = set(without)
    unknown = skip - COMPONENTS.keys()
    if unknown:
        raise KeyError(f"unknown component(s): {', '.join(sorted(unknown))}")
    parts = [c for name, c in COMPONENTS.items() if name not in skip]
    return compose([*parts, *extra], ControlBindings(), cfg)

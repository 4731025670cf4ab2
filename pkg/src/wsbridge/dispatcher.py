"""Mode dispatcher: suspends indentation handling inside bracketed regions.

Matching of opening and closing brackets is *not* checked here; a stray or
mismatched closer is the parser's problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .tokens import CLOSE_KINDS, OPEN_KINDS, Kind, Token


class Mode(Enum):
    WS_SENSITIVE = "ws sensitive"
    WS_INSENSITIVE = "ws insensitive"


class Route(Enum):
    TO_PREPROCESSOR = "emitWS"
    TO_BUFFER = "emitNWS"


@dataclass(frozen=True, slots=True)
class DispatcherState:
    bracket_stack: tuple[Kind, ...] = ()

    @property
    def mode(self) -> Mode:
        return Mode.WS_INSENSITIVE if self.bracket_stack else Mode.WS_SENSITIVE

    @property
    def depth(self) -> int:
        return len(self.bracket_stack)


INITIAL = DispatcherState()


def dispatch(t: Token, st: DispatcherState) -> tuple[Route, DispatcherState]:
    """Route one token and return the successor state.

    The opening bracket of an outermost region still travels to the
    preprocessor: it is the first content of its logical line and the
    preprocessor has to know the line is not blank.
    """
    kind = t.kind
    if not st.bracket_stack:
        if kind in OPEN_KINDS:
            return Route.TO_PREPROCESSOR, DispatcherState((kind,))
        return Route.TO_PREPROCESSOR, st
    if kind in OPEN_KINDS:
        return Route.TO_BUFFER, DispatcherState(st.bracket_stack + (kind,))
    if kind in CLOSE_KINDS:
        return Route.TO_BUFFER, DispatcherState(st.bracket_stack[:-1])
    return Route.TO_BUFFER, st

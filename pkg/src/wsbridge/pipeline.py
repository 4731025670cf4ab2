"""Pull-based buffer joining the dispatcher and preprocessor outputs.

The parser only ever sees default-channel tokens; hidden tokens are kept
in the recorded stream for the serializer and the debug CLI.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator

from .dispatcher import INITIAL, Route, dispatch
from .lexer import LexerConfig, iter_tokens
from .preprocessor import IndentState, check_first_line, process
from .tokens import Channel, Token, TokenKind


class TokenCursor:
    """Iterator with unbounded peeking."""

    def __init__(self, tokens: Iterable[Token]) -> None:
        self._it = iter(tokens)
        self._buf: deque[Token] = deque()

    def peek(self, k: int = 0) -> Token:
        while len(self._buf) <= k:
            self._buf.append(next(self._it))
        return self._buf[k]

    def next(self) -> Token:
        if self._buf:
            return self._buf.popleft()
        return next(self._it)


class Pipeline:
    """lexer -> mode dispatcher -> indentation preprocessor -> buffer.

    Iterating a pipeline yields parser-visible tokens, ending with EOF.
    """

    def __init__(self, source: str, cfg: LexerConfig = LexerConfig(), *, record: bool = True) -> None:
        self.cfg = cfg
        self._cursor = TokenCursor(iter_tokens(source, cfg))
        self._dstate = INITIAL
        self._istate = IndentState()
        self._queue: deque[Token] = deque()
        self._started = False
        self._done = False
        self.record = record
        self.history: list[Token] = []

    def _pump(self) -> None:
        if not self._started:
            self._started = True
            check_first_line(self._cursor, self.cfg.indent_policy)
        tok = self._cursor.next()
        route, self._dstate = dispatch(tok, self._dstate)
        if route is Route.TO_BUFFER:
            out = [tok]
        else:
            out, self._istate = process(tok, self._istate, self._cursor, self.cfg.indent_policy)
        if self.record:
            self.history.extend(out)
        self._queue.extend(out)

    def next_parser_token(self) -> Token:
        if self._done:
            raise StopIteration
        while True:
            while not self._queue:
                self._pump()
            tok = self._queue.popleft()
            if tok.channel is Channel.DEFAULT:
                if tok.kind is TokenKind.EOF:
                    self._done = True
                return tok

    def __iter__(self) -> Iterator[Token]:
        while not self._done:
            yield self.next_parser_token()

    def full_stream(self) -> list[Token]:
        """Drain the pipeline and return everything emitted, hidden tokens included."""
        if not self.record:
            raise RuntimeError("pipeline was created with record=False")
        for _ in self:
            pass
        return list(self.history)


def full_stream(source: str, cfg: LexerConfig = LexerConfig()) -> list[Token]:
    return Pipeline(source, cfg).full_stream()


def parser_tokens(source: str, cfg: LexerConfig = LexerConfig()) -> list[Token]:
    return list(Pipeline(source, cfg, record=False))

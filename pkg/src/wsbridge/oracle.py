"""Line-based reference for indentation boundaries.

Deliberately shares nothing with the streaming lexer/preprocessor: it works
on physical lines, counts tokens with its own small regex, and keeps its own
indent stack. Tests compare its event list against the pipeline's.

Physical lines are joined into logical lines on a trailing backslash, an
open bracket, or an unterminated triple-quoted string.
"""

from __future__ import annotations

import re

from .errors import IndentMismatch, TabsDisallowed

STMT_END = "STMT_END"
BLOCK_START = "BLOCK_START"
BLOCK_END = "BLOCK_END"

_TOKEN = re.compile(
    r"""
      (?P<ws>[ \t]+)
    | (?P<comment>\#.*)
    | (?P<tstring>\"\"\"(?:\\.|[^\\])*?\"\"\"|'''(?:\\.|[^\\])*?''')
    | (?P<topen>\"\"\"|''')
    | (?P<string>"(?:\\.|[^\\"\n])*"|'(?:\\.|[^\\'\n])*')
    | (?P<number>\d+\.\d+(?:[eE][+-]?\d+)?|\d+)
    | (?P<name>[^\W\d]\w*)
    | (?P<semi>[;⁏])
    | (?P<open>[(\[{])
    | (?P<close>[)\]}])
    | (?P<op>\*\*|//|==|!=|<=|>=|\+=|-=|\+\+|[-+*/%<>=,:.])
    | (?P<cont>\\(?=\n|$))
    | (?P<newline>\n)
    """,
    re.VERBOSE | re.DOTALL,
)


def content(n: int) -> tuple[str, int]:
    return ("CONTENT", n)


def _scan(text: str) -> tuple[list[int], int, bool, bool]:
    """Token counts per ';'-separated segment, bracket depth, open string, continued."""
    segments = [0]
    depth = 0
    i = 0
    continued = False
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ValueError(f"oracle cannot tokenize {text[i:i + 10]!r}")
        kind = m.lastgroup
        i = m.end()
        if kind == "topen":
            return segments, depth, True, False
        continued = kind == "cont"
        if kind in ("ws", "comment", "newline", "cont"):
            continue
        if kind == "semi":
            segments.append(0)
            continue
        if kind == "open":
            depth += 1
        elif kind == "close":
            depth -= 1
        segments[-1] += 1
    return segments, depth, False, continued


def _width(line: str, tab_stop: int, allow_tabs: bool) -> int:
    col = 0
    for ch in line:
        if ch == " ":
            col += 1
        elif ch == "\t":
            if not allow_tabs:
                raise TabsDisallowed("tab in leading whitespace")
            col = (col // tab_stop + 1) * tab_stop
        else:
            break
    return col


def oracle_boundaries(source: str, tab_stop: int = 8, allow_tabs: bool = True) -> list:
    lines = re.split(r"\r?\n", source)
    events: list = []
    stack = [0]
    seen_content = False
    i = 0
    while i < len(lines):
        first = lines[i]
        text = first
        i += 1
        while True:
            segments, depth, open_string, continued = _scan(text)
            if (depth > 0 or open_string or continued) and i < len(lines):
                text = (text[:-1] if continued else text) + "\n" + lines[i]
                i += 1
                continue
            break
        if sum(segments) == 0 and len(segments) == 1:
            continue

        indent = _width(first, tab_stop, allow_tabs)
        if not seen_content:
            if indent != 0:
                raise IndentMismatch("unexpected indent on first line")
        elif indent > stack[-1]:
            stack.append(indent)
            events.append(BLOCK_START)
        else:
            if events[-1] != STMT_END:
                events.append(STMT_END)
            while indent < stack[-1]:
                stack.pop()
                events.append(BLOCK_END)
            if indent != stack[-1]:
                raise IndentMismatch(f"dedent to column {indent} matches no enclosing block")
        seen_content = True

        for j, n in enumerate(segments):
            if j:
                events.append(STMT_END)
            if n:
                events.append(content(n))

    if seen_content and events[-1] != STMT_END:
        events.append(STMT_END)
    events.extend(BLOCK_END for _ in stack[1:])
    return events

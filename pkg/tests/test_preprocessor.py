from __future__ import annotations

import pytest

from wsbridge.errors import IndentMismatch, TabsDisallowed
from wsbridge.lexer import LexerConfig, lex
from wsbridge.pipeline import TokenCursor, full_stream
from wsbridge.preprocessor import END_OF_INPUT, IndentState, calc_current_indent, process
from wsbridge.tokens import IndentPolicy, SourcePos, TokenKind as K

from support import TOY_PROGRAM, boundary_events, toy_lexer_config

B, S, E = "BLOCK_START", "STMT_END", "BLOCK_END"


def visible(src, cfg=LexerConfig()):
    return [t.kind.name for t in full_stream(src, cfg) if not t.hidden]


def indent_of(src, tab_stop=8):
    return calc_current_indent(TokenCursor(lex(src)), IndentPolicy(tab_stop=tab_stop))


def test_indent_spaces():
    assert indent_of("    x") == 4


def test_indent_skips_blank_and_comment_lines():
    assert indent_of("\n# c\n  y") == 2
    assert indent_of("\n   \n\t# c\n  y") == 2


def test_indent_tab_expansion():
    assert indent_of("\tx") == 8
    assert indent_of("\tx", tab_stop=4) == 4
    assert indent_of("  \tx", tab_stop=4) == 4
    assert indent_of(" \t x") == 9


def test_indent_end_of_input():
    assert indent_of("\n  # only a comment\n") is END_OF_INPUT


def test_indent_does_not_consume():
    cur = TokenCursor(lex("\n  y"))
    calc_current_indent(cur)
    assert cur.next().kind is K.NEWLINE


def test_toy_program():
    names = visible(TOY_PROGRAM, toy_lexer_config())
    assert names == ["PRINT", "STRING", S, "IF", "INT", "LT", "INT", "COLON", B,
                     "PRINT", "STRING", S, E, "EOF"]


def test_two_levels_popped():
    names = visible("if a:\n    if b:\n        x = 1\ny = 2\n")
    i = names.index("INT")
    assert names[i + 1:i + 4] == [S, E, E]
    assert names[i + 4:] == ["NAME", "ASSIGN", "INT", S, "EOF"]


def test_nested_dedent_boundaries():
    # frozen from the line-based oracle
    assert boundary_events(full_stream("if a:\n  if b:\n    c\nd\n")) == [
        ("CONTENT", 3), B, ("CONTENT", 3), B, ("CONTENT", 1), S, E, E, ("CONTENT", 1), S]


def test_empty_input():
    assert [t.kind for t in full_stream("")] == [K.EOF]


def test_blank_and_comment_lines_inside_block():
    assert visible("if a:\n  b\n\n\n  # c\n  d\n") == [
        "IF", "NAME", "COLON", B, "NAME", S, "NAME", S, E, "EOF"]


def test_blocks_closed_at_eof_without_newline():
    assert visible("if a:\n  b") == ["IF", "NAME", "COLON", B, "NAME", S, E, "EOF"]


def test_semicolons_do_not_double_stmt_end():
    assert visible("x = 1;\ny = 2; z\n") == [
        "NAME", "ASSIGN", "INT", S, "NAME", "ASSIGN", "INT", S, "NAME", S, "EOF"]


def test_continuation_suppresses_boundary():
    assert visible("x = 1 + \\\n        2\ny\n") == [
        "NAME", "ASSIGN", "INT", "PLUS", "INT", S, "NAME", S, "EOF"]


def test_dedent_to_unknown_level():
    with pytest.raises(IndentMismatch) as info:
        full_stream("if a:\n    b\n  c\n")
    assert info.value.pos == SourcePos(3, 0)


def test_first_line_indent():
    with pytest.raises(IndentMismatch) as info:
        full_stream("  x\n")
    assert info.value.pos == SourcePos(1, 0)
    with pytest.raises(IndentMismatch):
        full_stream("# header\n\n   x = 1\n")


def test_tabs_disallowed():
    cfg = LexerConfig(indent_policy=IndentPolicy(allow_tabs=False))
    with pytest.raises(TabsDisallowed):
        full_stream("if a:\n\tb\n", cfg)
    # tabs after the indentation are fine
    assert visible("x =\t1\n", cfg) == ["NAME", "ASSIGN", "INT", S, "EOF"]


def test_tab_stop_changes_structure():
    src = "if a:\n\tif b:\n\t\tc\n\t        d\n"
    # with tab_stop 8 '\t' + 8 spaces == '\t\t'; with tab_stop 4 it opens a third block
    assert visible(src).count(B) == 2
    assert visible(src, LexerConfig(indent_policy=IndentPolicy(tab_stop=4))).count(B) == 3


def test_process_hidden_passthrough_and_reset():
    toks = lex("x\ny")
    cur = TokenCursor(toks[1:])
    out, st = process(toks[0], IndentState(), cur)
    assert out == [toks[0]] and st.content_since_boundary
    nl = cur.next()
    out, st = process(nl, st, cur)
    assert [t.kind for t in out] == [K.STMT_END, K.NEWLINE]
    assert st == IndentState()

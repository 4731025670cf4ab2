from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from wsbridge.lexer import lex
from wsbridge.pipeline import Pipeline, full_stream, parser_tokens
from wsbridge.tokens import Channel, TokenKind as K, is_content

from support import TOY_PROGRAM, BRACKETED_CALL, generate, toy_lexer_config


def test_parser_sees_assignment():
    toks = parser_tokens("x = 1\n")
    assert [t.kind for t in toks] == [K.NAME, K.ASSIGN, K.INT, K.STMT_END, K.EOF]


def test_parser_sees_eof_only_for_empty_input():
    assert [t.kind for t in parser_tokens("")] == [K.EOF]


def test_full_stream_assignment():
    toks = full_stream("x = 1\n")
    assert [(t.kind, t.channel) for t in toks] == [
        (K.NAME, Channel.DEFAULT), (K.WS, Channel.HIDDEN), (K.ASSIGN, Channel.DEFAULT),
        (K.WS, Channel.HIDDEN), (K.INT, Channel.DEFAULT), (K.STMT_END, Channel.DEFAULT),
        (K.NEWLINE, Channel.HIDDEN), (K.EOF, Channel.DEFAULT)]


def test_full_stream_bracket_newline_is_hidden():
    toks = full_stream("f(\n1)\n")
    assert [t.kind for t in toks] == [
        K.NAME, K.LPAREN, K.NEWLINE, K.INT, K.RPAREN, K.STMT_END, K.NEWLINE, K.EOF]
    assert toks[2].hidden


def test_toy_program_parser_view():
    kinds = [t.kind.name for t in Pipeline(TOY_PROGRAM, toy_lexer_config())]
    assert kinds[:3] == ["PRINT", "STRING", "STMT_END"]
    assert kinds[-1] == "EOF"


def test_no_control_tokens_inside_brackets():
    toks = full_stream(BRACKETED_CALL)
    inner = toks[toks.index(next(t for t in toks if t.kind is K.LPAREN)):]
    inner = inner[:next(i for i, t in enumerate(inner) if t.kind is K.RPAREN)]
    assert not any(t.kind in (K.BLOCK_START, K.BLOCK_END, K.STMT_END) for t in inner)


def test_pull_is_lazy():
    p = Pipeline("x = 1\ny = 2\n")
    assert p.next_parser_token().kind is K.NAME
    # only the first line has been lexed so far
    assert all(t.pos.line == 1 for t in p.history)


def test_record_false_refuses_full_stream():
    p = Pipeline("x\n", record=False)
    try:
        p.full_stream()
    except RuntimeError:
        pass
    else:
        raise AssertionError("expected RuntimeError")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_pull_equals_filtered_stream(seed, brackets):
    src = generate(seed, brackets=brackets)
    pulled = parser_tokens(src)
    pushed = [t for t in full_stream(src) if t.channel is Channel.DEFAULT]
    assert pulled == pushed


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_content_order_preserved(seed, brackets):
    src = generate(seed, brackets=brackets)
    before = [t for t in lex(src) if is_content(t.kind)]
    after = [t for t in full_stream(src) if is_content(t.kind)]
    assert before == after

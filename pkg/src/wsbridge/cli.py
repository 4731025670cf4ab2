"""Command-line interface: ``wsbridge tokens|parse|render|corpus``.

Exit codes: 0 success, 1 corpus failures, 2 lex/parse/indentation error,
3 well-formedness diagnostics.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import nodes
from .errors import WsBridgeError
from .grammar import COMPONENTS, build_minipython_registry, check_wellformed, parse_module
from .lexer import LexerConfig, lex
from .pipeline import Pipeline
from .serializer import render_delimited
from .tokens import IndentPolicy, format_token

EXIT_OK, EXIT_CORPUS, EXIT_ERROR, EXIT_DIAGNOSTICS = 0, 1, 2, 3
CORPUS_SUFFIX = ".mpy"
MANIFEST = "manifest.txt"


def lexer_config(delimited: bool = False) -> LexerConfig:
    tab = os.environ.get("WSBRIDGE_TABSTOP")
    policy = IndentPolicy(tab_stop=int(tab)) if tab else IndentPolicy()
    return LexerConfig(indent_policy=policy, recognize_control_glyphs=delimited)


def _read(path: str) -> str:
    with open(path, encoding="utf-8", newline="") as f:
        return f.read()


def _fail(path: str, err: WsBridgeError) -> int:
    print(err.diagnostic(path), file=sys.stderr)
    return EXIT_ERROR


def cmd_tokens(args: argparse.Namespace) -> int:
    try:
        source = _read(args.path)
        if args.raw or args.delimited:
            toks = lex(source, lexer_config(args.delimited))
        else:
            toks = Pipeline(source, lexer_config()).full_stream()
    except WsBridgeError as err:
        return _fail(args.path, err)
    for t in toks:
        print(format_token(t))
    return EXIT_OK


def _parse_source(source: str, delimited: bool, without: tuple[str, ...] = ()) -> nodes.Module:
    reg = build_minipython_registry(without=without)
    cfg = lexer_config(delimited)
    toks = lex(source, cfg) if delimited else Pipeline(source, cfg, record=False)
    return parse_module(toks, reg)


def cmd_parse(args: argparse.Namespace) -> int:
    try:
        module = _parse_source(_read(args.path), args.delimited)
    except WsBridgeError as err:
        return _fail(args.path, err)
    print(nodes.to_json(module) if args.format == "json" else nodes.to_sexpr(module))
    if args.check:
        diags = check_wellformed(module)
        for d in diags:
            print(d.format(args.path), file=sys.stderr)
        if diags:
            return EXIT_DIAGNOSTICS
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    try:
        text = render_delimited(Pipeline(_read(args.path), lexer_config()).full_stream())
    except WsBridgeError as err:
        return _fail(args.path, err)
    sys.stdout.write(text)
    return EXIT_OK


@dataclass(frozen=True)
class FileResult:
    path: str
    code: str | None  # None means PASS
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.code is None


def check_file(path: str, without: tuple[str, ...] = ()) -> FileResult:
    """Parse + well-formedness check of one corpus file."""
    try:
        source = _read(path)
    except (OSError, UnicodeDecodeError) as err:
        return FileResult(path, "IO", str(err))
    try:
        module = _parse_source(source, False, without)
    except WsBridgeError as err:
        return FileResult(path, err.code, err.diagnostic(path))
    diags = check_wellformed(module)
    if diags:
        return FileResult(path, diags[0].code, diags[0].format(path))
    return FileResult(path, None)


def read_manifest(directory: Path) -> dict[str, dict[str, str]]:
    """``<file> key: value`` lines from every manifest.txt below ``directory``."""
    entries: dict[str, dict[str, str]] = {}
    for manifest in sorted(directory.rglob(MANIFEST)):
        for raw in manifest.read_text(encoding="utf-8").splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            name, _, rest = line.partition(" ")
            key, _, value = rest.strip().partition(":")
            rel = (manifest.parent / name).relative_to(directory).as_posix()
            entries.setdefault(rel, {})[key.strip()] = value.strip()
    return entries


def run_corpus(directory: Path, without: tuple[str, ...] = (), jobs: int = 1) -> list[FileResult]:
    files = sorted(str(p) for p in directory.rglob(f"*{CORPUS_SUFFIX}") if p.is_file())
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_file, files, [without] * len(files)))
    else:
        results = [check_file(f, without) for f in files]
    return sorted(results, key=lambda r: r.path)


def cmd_corpus(args: argparse.Namespace) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"{args.dir}: not a directory", file=sys.stderr)
        return EXIT_ERROR
    without = tuple(args.without)
    unknown = set(without) - COMPONENTS.keys()
    if unknown:
        print(f"unknown component(s): {', '.join(sorted(unknown))}", file=sys.stderr)
        return EXIT_ERROR
    results = run_corpus(directory, without, args.jobs)
    manifest = read_manifest(directory) if args.expect else {}
    mismatches = 0
    for r in results:
        rel = Path(r.path).relative_to(directory).as_posix()
        line = f"PASS {rel}" if r.passed else f"FAIL {rel} {r.code}"
        if args.expect:
            wanted = manifest.get(rel, {}).get("expect")
            if without and "uses" in manifest.get(rel, {}):
                used = {u.strip() for u in manifest[rel]["uses"].split(",")}
                if used & set(without):
                    wanted = wanted or "NoStatementParser"
            ok = (r.code is None and wanted is None) or r.code == wanted
            mismatches += not ok
            line += f" (expected {wanted or 'PASS'})" if not ok else " (as expected)"
        print(line)
        if args.report and r.detail:
            print(f"    {r.detail}")
    passed = sum(r.passed for r in results)
    total = len(results)
    pct = 100.0 * passed / total if total else 100.0
    print(f"parsed {passed}/{total} files ({pct:.0f}%)")
    if args.report:
        for code, n in sorted(Counter(r.code for r in results if r.code).items()):
            print(f"  {code}: {n}")
    if args.expect:
        print(f"{total - mismatches}/{total} files match the manifest")
        return EXIT_OK if mismatches == 0 else EXIT_CORPUS
    return EXIT_OK if passed == total else EXIT_CORPUS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wsbridge", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tokens", help="dump tokens")
    p.add_argument("path")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--raw", action="store_true", help="lexer output only")
    mode.add_argument("--processed", action="store_true", help="after preprocessing (default)")
    mode.add_argument("--delimited", action="store_true", help="lex delimited text (control glyphs)")
    p.set_defaults(func=cmd_tokens)

    p = sub.add_parser("parse", help="parse and print the AST")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "sexpr"), default="sexpr")
    p.add_argument("--check", action="store_true", help="run well-formedness checks")
    p.add_argument("--delimited", action="store_true", help="input is delimited text")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("render", help="print the delimited form")
    p.add_argument("path")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("corpus", help="parse every *.mpy file below a directory")
    p.add_argument("dir")
    p.add_argument("--report", action="store_true", help="show diagnostics and a per-code summary")
    p.add_argument("--expect", action="store_true",
                   help="compare outcomes with manifest.txt instead of requiring all to pass")
    p.add_argument("--without", action="append", default=[], metavar="COMPONENT",
                   help="compose the language without this component (repeatable)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, UnicodeDecodeError) as err:
        print(f"{getattr(args, 'path', '-')}:1:0: IO {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front door.

Subcommands: parse (AST to stdout), check (silent validation), ising (QMASM
to Ising-model JSON), solve (exact ground states as JSON). Diagnostics go to
stderr; stdout carries only the requested artifact.

Exit codes: 0 success, 1 lex/parse error, 2 semantic error, 3 usage error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import blackbird, qasm, qmasm
from .ast import serialize_ast
from .diagnostics import DiagnosticError, render_diagnostic
from .qmasm.ising import sem_error
from .qmasm.printer import print_expr as qmasm_print_expr
from .qmasm.semantics import check_assertions, elaborate, expand_macros, resolve_includes

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SEMANTIC = 2
EXIT_USAGE = 3
EXIT_IO = 4

_EXTENSIONS = {".qasm": "qasm", ".xbb": "blackbird", ".qmasm": "qmasm"}
_PARSERS = {
    "qasm": qasm.parse_string,
    "blackbird": blackbird.parse_string,
    "qmasm": qmasm.parse_string,
}


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract says 3
        raise _UsageError(message)


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="qlparse")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="input file, or - for standard input")

    def add_lang(p):
        p.add_argument("--lang", choices=("qasm", "blackbird", "qmasm"),
                       help="input language (default: by file extension)")

    def add_include_dirs(p):
        p.add_argument("--include-dir", action="append", default=[],
                       help="QMASM include search directory (repeatable, searched in order)")

    p_parse = sub.add_parser("parse", help="parse and emit the AST")
    p_parse.add_argument("--format", choices=("json", "pretty"), default="json")
    add_lang(p_parse)
    add_input(p_parse)

    p_check = sub.add_parser("check", help="parse and validate, no output")
    add_lang(p_check)
    add_include_dirs(p_check)
    add_input(p_check)

    p_ising = sub.add_parser("ising", help="flatten QMASM to an Ising model")
    add_include_dirs(p_ising)
    add_input(p_ising)

    p_solve = sub.add_parser("solve", help="exact ground states of a QMASM program")
    p_solve.add_argument("--max-spins", type=int, default=24)
    add_include_dirs(p_solve)
    add_input(p_solve)
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as handle:
            data = handle.read()
    return data.decode("utf-8")


def _language(args) -> str:
    lang = getattr(args, "lang", None)
    if lang:
        return lang
    if args.input != "-":
        ext = os.path.splitext(args.input)[1]
        if ext in _EXTENSIONS:
            return _EXTENSIONS[ext]
    raise _UsageError("cannot infer the language; pass --lang")


def _make_loader(args):
    dirs = list(getattr(args, "include_dir", []))
    if args.input != "-":
        dirs.append(os.path.dirname(os.path.abspath(args.input)))
    dirs.append(os.curdir)

    def loader(path: str) -> str | None:
        for base in dirs:
            candidate = os.path.join(base, path)
            if os.path.isfile(candidate):
                with open(candidate, "rb") as handle:
                    return handle.read().decode("utf-8")
        return None

    return loader


def _qmasm_pipeline(source: str, args) -> qmasm.IsingModel:
    program = qmasm.parse_string(source)
    program = resolve_includes(program, _make_loader(args))
    resolved = elaborate(expand_macros(program))
    model = qmasm.flatten_to_ising(resolved)
    for node, verdict in check_assertions(resolved, model):
        if not verdict:
            raise sem_error("SEM313",
                            f"assertion failed: {qmasm_print_expr(node.children[0])}",
                            node.span)
    return model


def _run(args, source: str) -> int:
    if args.command == "parse":
        ast = _PARSERS[_language(args)](source)
        sys.stdout.write(serialize_ast(ast, args.format) + "\n")
        return EXIT_OK
    if args.command == "check":
        lang = _language(args)
        if lang == "qmasm":
            _qmasm_pipeline(source, args)
        else:
            _PARSERS[lang](source)
        return EXIT_OK
    if args.command == "ising":
        model = _qmasm_pipeline(source, args)
        sys.stdout.write(model.to_json() + "\n")
        return EXIT_OK
    model = _qmasm_pipeline(source, args)
    result = qmasm.brute_force_ground_states(model, max_spins=args.max_spins)
    symbols = model.symbols()
    states = [{s: config.assignment[s] for s in symbols} for config in result.configurations]
    payload = {"energy": result.min_energy, "states": states, "feasible": result.feasible_count}
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        source = _read_input(args.input)
    except UnicodeDecodeError as exc:
        print(f"error LEX000: invalid encoding: {exc.reason}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        return _run(args, source)
    except DiagnosticError as exc:
        print(render_diagnostic(exc.diagnostic, source), file=sys.stderr)
        return EXIT_SEMANTIC if exc.code.startswith("SEM") else EXIT_PARSE
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

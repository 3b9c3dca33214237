"""Lexer for the gate-model QASM frontend (OpenQASM 2.0 subset)."""

from __future__ import annotations

import re
from enum import Enum, auto

from ..cursor import new_cursor
from ..diagnostics import error
from ..position import SourcePosition, Span
from ..tokens import LexemeTable, Token


class TokenKind(Enum):
    Id = auto()
    Int = auto()
    Real = auto()
    Str = auto()
    # keywords
    Openqasm = auto()
    Include = auto()
    Qreg = auto()
    Creg = auto()
    Gate = auto()
    Measure = auto()
    Reset = auto()
    Barrier = auto()
    If = auto()
    Pi = auto()
    # symbols
    Semicolon = auto()
    Comma = auto()
    Lbrac = auto()
    Rbrac = auto()
    Lsqbrac = auto()
    Rsqbrac = auto()
    Lcurl = auto()
    Rcurl = auto()
    Arrow = auto()
    EqEq = auto()
    Plus = auto()
    Minus = auto()
    Times = auto()
    Divide = auto()
    Power = auto()
    Eof = auto()


KEYWORDS = {
    "OPENQASM": TokenKind.Openqasm,
    "include": TokenKind.Include,
    "qreg": TokenKind.Qreg,
    "creg": TokenKind.Creg,
    "gate": TokenKind.Gate,
    "measure": TokenKind.Measure,
    "reset": TokenKind.Reset,
    "barrier": TokenKind.Barrier,
    "if": TokenKind.If,
    "pi": TokenKind.Pi,
}

# "->" and "==" must out-rank "-" and "=": the table is longest-match.
SYMBOLS = LexemeTable([
    ("->", TokenKind.Arrow),
    ("==", TokenKind.EqEq),
    (";", TokenKind.Semicolon),
    (",", TokenKind.Comma),
    ("(", TokenKind.Lbrac),
    (")", TokenKind.Rbrac),
    ("[", TokenKind.Lsqbrac),
    ("]", TokenKind.Rsqbrac),
    ("{", TokenKind.Lcurl),
    ("}", TokenKind.Rcurl),
    ("+", TokenKind.Plus),
    ("-", TokenKind.Minus),
    ("*", TokenKind.Times),
    ("/", TokenKind.Divide),
    ("^", TokenKind.Power),
])

# One alternation drives the whole scan (throughput: a 10k-line file must lex
# well under a second). Alternative order matters: trivia first, broken
# exponents before well-formed reals, reals before ints.
_TOKEN_RE = re.compile(
    r"""
      (?P<skip>(?:[ \t\r\n]+|//[^\n]*)+)
    | (?P<badnum>(?:\d+\.?\d*|\.\d+)[eE][+-](?!\d))
    | (?P<real>(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
    | (?P<int>\d+)
    | (?P<str>"[^"\n]*")
    | (?P<badstr>"[^"\n]*)
    | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<sym>->|==|[;,()\[\]{}+\-*/^])
    """,
    re.VERBOSE,
)

_SYM_KINDS = {lit: kind for lit, kind in SYMBOLS.entries.items()}


def lex(source: str) -> list[Token]:
    """Tokenize QASM source. `//` comments and whitespace are trivia."""
    new_cursor(source)  # validates the encoding (LEX000)
    ascii_only = source.isascii()
    tokens: list[Token] = []
    emit = tokens.append
    i = 0
    line = 1
    line_start = 0  # char index where the current line begins
    offset = 0      # byte offset of char index i (equals i for ascii input)
    length = len(source)
    scan = _TOKEN_RE.match
    while i < length:
        m = scan(source, i)
        if m is None:
            pos = SourcePosition(line, i - line_start + 1, offset)
            end = SourcePosition(line, i - line_start + 2,
                                 offset + len(source[i].encode("utf-8")))
            raise error("LEX101", f"unknown character {source[i]!r}", Span(pos, end))
        group = m.lastgroup
        text = m.group(0)
        start = SourcePosition(line, i - line_start + 1, offset)
        i = m.end()
        offset = i if ascii_only else offset + len(text.encode("utf-8"))
        if "\n" in text:
            line += text.count("\n")
            line_start = m.start() + text.rfind("\n") + 1
        if group == "skip":
            continue
        span = Span(start, SourcePosition(line, i - line_start + 1, offset))
        if group == "int":
            emit(Token(TokenKind.Int, text, span, int(text)))
        elif group == "real":
            emit(Token(TokenKind.Real, text, span, float(text)))
        elif group == "id":
            emit(Token(KEYWORDS.get(text, TokenKind.Id), text, span))
        elif group == "sym":
            emit(Token(_SYM_KINDS[text], text, span))
        elif group == "str":
            emit(Token(TokenKind.Str, text, span, text[1:-1]))
        elif group == "badnum":
            raise error("LEX102", "malformed number: exponent has no digits", span)
        else:  # badstr
            raise error("LEX103", "unterminated string", span)
    end_pos = SourcePosition(line, i - line_start + 1, offset)
    emit(Token(TokenKind.Eof, "", Span(end_pos, end_pos)))
    return tokens

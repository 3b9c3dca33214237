"""Lexer for the continuous-variable Blackbird frontend.

The language is line-oriented: newlines are emitted as Newline tokens and `#`
comments are trivia. `**` needs a lookahead so it never lexes as two `*`.
"""

from __future__ import annotations

import re
from enum import Enum, auto

from ..cursor import new_cursor
from ..diagnostics import error
from ..position import Span
from ..scanning import at_number, scan_number, scan_string
from ..tokens import LexemeTable, Token


class TokenKind(Enum):
    Id = auto()
    Int = auto()
    Real = auto()
    Complex = auto()
    Bool = auto()
    Str = auto()
    Newline = auto()
    # symbols
    Pipe = auto()
    Comma = auto()
    Lbrac = auto()
    Rbrac = auto()
    Lsqbrac = auto()
    Rsqbrac = auto()
    Assign = auto()
    Plus = auto()
    Minus = auto()
    Times = auto()
    Divide = auto()
    Power = auto()
    Eof = auto()


SYMBOLS = LexemeTable([
    ("**", TokenKind.Power),
    ("|", TokenKind.Pipe),
    (",", TokenKind.Comma),
    ("(", TokenKind.Lbrac),
    (")", TokenKind.Rbrac),
    ("[", TokenKind.Lsqbrac),
    ("]", TokenKind.Rsqbrac),
    ("=", TokenKind.Assign),
    ("+", TokenKind.Plus),
    ("-", TokenKind.Minus),
    ("*", TokenKind.Times),
    ("/", TokenKind.Divide),
])

_WS = re.compile(r"[ \t\r]+")
_COMMENT = re.compile(r"#[^\n]*")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def lex(source: str) -> list[Token]:
    cur = new_cursor(source)
    tokens: list[Token] = []
    while not cur.at_end():
        if cur.take(_WS) or cur.take(_COMMENT):
            continue
        start = cur.position()
        if cur.peek() == "\n":
            cur.advance()
            tokens.append(Token(TokenKind.Newline, "\n", cur.span_from(start)))
            continue
        if at_number(cur):
            lexeme, value, is_real = scan_number(cur, "LEX202")
            if cur.peek() == "j":  # imaginary literal, e.g. 2j in 1+2j
                cur.advance()
                tokens.append(Token(TokenKind.Complex, lexeme + "j", cur.span_from(start),
                                    float(value)))
                continue
            kind = TokenKind.Real if is_real else TokenKind.Int
            tokens.append(Token(kind, lexeme, cur.span_from(start), value))
            continue
        if cur.peek() == '"':
            lexeme, text = scan_string(cur, "LEX203")
            tokens.append(Token(TokenKind.Str, lexeme, cur.span_from(start), text))
            continue
        ident = cur.take(_IDENT)
        if ident:
            if ident in ("true", "false"):
                tokens.append(Token(TokenKind.Bool, ident, cur.span_from(start), ident == "true"))
            else:
                tokens.append(Token(TokenKind.Id, ident, cur.span_from(start)))
            continue
        sym = SYMBOLS.match_longest(cur)
        if sym:
            kind, length = sym
            lexeme = cur.source[cur.index : cur.index + length]
            cur.advance(length)
            tokens.append(Token(kind, lexeme, cur.span_from(start)))
            continue
        bad = cur.peek()
        cur.advance()
        raise error("LEX201", f"unknown character {bad!r}", cur.span_from(start))
    end = cur.position()
    tokens.append(Token(TokenKind.Eof, "", Span(end, end)))
    return tokens

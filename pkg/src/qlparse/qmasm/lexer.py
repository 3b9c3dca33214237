"""Lexer for the QMASM frontend.

Line-oriented: newlines are Newline tokens, `#` comments are trivia.
`!`-prefixed directives lex as single keyword tokens, `!next.`-prefixed
symbols lex as identifiers, and the relation symbols `/=`, `<->`, `:=`
need a lookahead of up to 3 characters.

A `-` lexes into a numeric literal iff it is immediately followed by a digit
(or `.digit`) and preceded by start-of-input, whitespace, `(`, or another
operator character. That keeps weight/coupling lines like `a b -1` at three
fields while `2 - 1`, `x-1`, and `2**-3` still read as subtraction/negation.
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
    Bool = auto()
    Str = auto()
    Newline = auto()
    # directives
    BeginMacro = auto()
    EndMacro = auto()
    UseMacro = auto()
    Include = auto()
    Assert = auto()
    For = auto()
    EndFor = auto()
    If = auto()
    Else = auto()
    EndIf = auto()
    Let = auto()
    Next = auto()
    # relations and operators
    Equal = auto()      # =   (chain)
    NotEqual = auto()   # /=  (anti-chain / comparison)
    Equiv = auto()      # <-> (equivalence)
    Assign = auto()     # :=  (pin / binding)
    DotDot = auto()     # ..  (range)
    Lt = auto()
    Gt = auto()
    Le = auto()
    Ge = auto()
    AndAnd = auto()
    OrOr = auto()
    Plus = auto()
    Minus = auto()
    Times = auto()
    Divide = auto()
    Percent = auto()
    Power = auto()
    Lbrac = auto()
    Rbrac = auto()
    Eof = auto()


DIRECTIVES = {
    "begin_macro": TokenKind.BeginMacro,
    "end_macro": TokenKind.EndMacro,
    "use_macro": TokenKind.UseMacro,
    "include": TokenKind.Include,
    "assert": TokenKind.Assert,
    "for": TokenKind.For,
    "end_for": TokenKind.EndFor,
    "if": TokenKind.If,
    "else": TokenKind.Else,
    "end_if": TokenKind.EndIf,
    "let": TokenKind.Let,
    "next": TokenKind.Next,
}

SYMBOLS = LexemeTable([
    ("<->", TokenKind.Equiv),
    (":=", TokenKind.Assign),
    ("/=", TokenKind.NotEqual),
    ("..", TokenKind.DotDot),
    ("<=", TokenKind.Le),
    (">=", TokenKind.Ge),
    ("**", TokenKind.Power),
    ("&&", TokenKind.AndAnd),
    ("||", TokenKind.OrOr),
    ("=", TokenKind.Equal),
    ("<", TokenKind.Lt),
    (">", TokenKind.Gt),
    ("+", TokenKind.Plus),
    ("-", TokenKind.Minus),
    ("*", TokenKind.Times),
    ("/", TokenKind.Divide),
    ("%", TokenKind.Percent),
    ("(", TokenKind.Lbrac),
    (")", TokenKind.Rbrac),
])

_WS = re.compile(r"[ \t\r]+")
_COMMENT = re.compile(r"#[^\n]*")
# Dots join identifier segments (macro-instance scope, e.g. inst.a) but never
# swallow a `..` range; a trailing [n] names one element of a qubit array.
_IDENT = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*(?:\.[A-Za-z0-9_$]+)*(?:\[\d+\])?")
_NEXT_SUFFIX = re.compile(r"(?:\.[A-Za-z0-9_$]+)+(?:\[\d+\])?")
_DIRECTIVE_WORD = re.compile(r"[a-z_]+")

_SIGN_CONTEXT = set(" \t\r\n(+-*/%<>=&|.,")


def _signed_number_here(cur) -> bool:
    if cur.peek() != "-":
        return False
    nxt = cur.peek(1)
    if not (nxt.isdigit() or (nxt == "." and cur.peek(2).isdigit())):
        return False
    return cur.index == 0 or cur.source[cur.index - 1] in _SIGN_CONTEXT


def lex(source: str) -> list[Token]:
    cur = new_cursor(source)
    tokens: list[Token] = []
    while not cur.at_end():
        if cur.take(_WS) or cur.take(_COMMENT):
            continue
        start = cur.position()
        ch = cur.peek()
        if ch == "\n":
            cur.advance()
            tokens.append(Token(TokenKind.Newline, "\n", cur.span_from(start)))
            continue
        if _signed_number_here(cur):
            begin = cur.index
            cur.advance()
            _, value, is_real = scan_number(cur, "LEX303")
            lexeme = cur.source[begin : cur.index]
            kind = TokenKind.Real if is_real else TokenKind.Int
            tokens.append(Token(kind, lexeme, cur.span_from(start), -value))
            continue
        if at_number(cur):
            lexeme, value, is_real = scan_number(cur, "LEX303")
            kind = TokenKind.Real if is_real else TokenKind.Int
            tokens.append(Token(kind, lexeme, cur.span_from(start), value))
            continue
        if ch == '"':
            lexeme, text = scan_string(cur, "LEX304")
            tokens.append(Token(TokenKind.Str, lexeme, cur.span_from(start), text))
            continue
        if ch == "!":
            cur.advance()
            word = cur.take(_DIRECTIVE_WORD)
            if word is None or word not in DIRECTIVES:
                raise error("LEX302", f"unknown directive !{word or ''}", cur.span_from(start))
            if word == "next" and cur.peek() == ".":
                suffix = cur.take(_NEXT_SUFFIX) or ""
                tokens.append(Token(TokenKind.Id, "!next" + suffix, cur.span_from(start)))
            else:
                tokens.append(Token(DIRECTIVES[word], "!" + word, cur.span_from(start)))
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
        raise error("LEX301", f"unknown character {bad!r}", cur.span_from(start))
    end = cur.position()
    tokens.append(Token(TokenKind.Eof, "", Span(end, end)))
    return tokens

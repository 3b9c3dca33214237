"""Tokens, longest-match lexeme tables, and the parser-side token stream."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .cursor import Cursor
from .diagnostics import error
from .position import Span


@dataclass(eq=True, slots=True)
class Token:
    """One lexed token. `lexeme` is exactly the source slice covered by `span`;
    `value` carries the literal payload for literal kinds and is None otherwise."""

    kind: Enum
    lexeme: str
    span: Span
    value: object = None

    def __repr__(self) -> str:  # keeps pytest diffs readable
        if self.value is not None:
            return f"{self.kind.name}({self.value!r})"
        return f"{self.kind.name}({self.lexeme!r})"


class LexemeTable:
    """Ordered (literal -> token kind) lookup map with longest-match semantics."""

    def __init__(self, entries: Iterable[tuple[str, Enum]]):
        self.entries: dict[str, Enum] = {}
        self._by_first: dict[str, list[tuple[str, Enum]]] = {}
        for literal, kind in entries:
            if literal in self.entries:
                raise ValueError(f"duplicate lexeme table entry {literal!r}")
            self.entries[literal] = kind
        # Bucket by first character, longest literal first, so a 1-char entry
        # can never shadow a 2-char entry at the same position.
        for literal, kind in sorted(self.entries.items(), key=lambda e: -len(e[0])):
            self._by_first.setdefault(literal[0], []).append((literal, kind))

    def match_longest(self, cursor: Cursor) -> tuple[Enum, int] | None:
        """Longest table literal that prefixes the remaining input, with its
        length in characters. The cursor is not advanced."""
        for literal, kind in self._by_first.get(cursor.peek(), ()):
            if cursor.startswith(literal):
                return kind, len(literal)
        return None


def match_longest(cursor: Cursor, table: LexemeTable) -> tuple[Enum, int] | None:
    return table.match_longest(cursor)


class TokenStream:
    """Lookahead-1 view over a token list, shared by the recursive-descent parsers."""

    def __init__(self, tokens: list[Token], eof_kind: Enum, unexpected_code: str):
        self.tokens = tokens
        self.pos = 0
        self.eof_kind = eof_kind
        self.unexpected_code = unexpected_code

    def peek(self, ahead: int = 0) -> Token:
        i = self.pos + ahead
        return self.tokens[i] if i < len(self.tokens) else self.tokens[-1]

    def at(self, kind: Enum, ahead: int = 0) -> bool:
        return self.peek(ahead).kind is kind

    def at_end(self) -> bool:
        return self.peek().kind is self.eof_kind

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind is not self.eof_kind:
            self.pos += 1
        return tok

    def accept(self, kind: Enum) -> Token | None:
        if self.at(kind):
            return self.next()
        return None

    def expect(self, kind: Enum, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind is not kind:
            wanted = what or kind.name
            raise error(
                self.unexpected_code,
                f"expected {wanted}, found {describe(tok)}",
                tok.span,
            )
        return self.next()


def describe(tok: Token) -> str:
    return "end of input" if tok.lexeme == "" else repr(tok.lexeme)


def reconstruct(source: str, tokens: list[Token]) -> str:
    """Token lexemes re-interleaved with the trivia gaps between their spans.

    Equals the original source exactly when the token stream tiles the input;
    the reconstruction invariant tests rely on this.
    """
    data = source.encode("utf-8")
    pieces = []
    last = 0
    for tok in tokens:
        pieces.append(data[last : tok.span.start.offset].decode("utf-8"))
        pieces.append(tok.lexeme)
        last = tok.span.end.offset
    pieces.append(data[last:].decode("utf-8"))
    return "".join(pieces)

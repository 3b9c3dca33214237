"""Character cursor over source text with position bookkeeping and lookahead."""

from __future__ import annotations

import re

from .diagnostics import Diagnostic, DiagnosticError
from .position import SourcePosition, Span


class Cursor:
    """Single-use scanning cursor. Reads one character at a time (with lookahead)
    and tracks line / column / byte-offset as it advances."""

    def __init__(self, source: str):
        self.source = source
        self.index = 0  # character index into source
        self.line = 1
        self.column = 1
        self.offset = 0  # byte offset
        self._ascii = source.isascii()

    def at_end(self) -> bool:
        return self.index >= len(self.source)

    def peek(self, ahead: int = 0) -> str:
        """Character `ahead` positions past the cursor, or '' past end-of-input."""
        i = self.index + ahead
        return self.source[i] if i < len(self.source) else ""

    def startswith(self, literal: str) -> bool:
        return self.source.startswith(literal, self.index)

    def position(self) -> SourcePosition:
        return SourcePosition(self.line, self.column, self.offset)

    def advance(self, count: int = 1) -> None:
        chunk = self.source[self.index : self.index + count]
        newlines = chunk.count("\n")
        if newlines:
            self.line += newlines
            self.column = len(chunk) - chunk.rfind("\n")
        else:
            self.column += len(chunk)
        self.offset += len(chunk) if self._ascii else len(chunk.encode("utf-8"))
        self.index += len(chunk)

    def match(self, pattern: re.Pattern[str]) -> str | None:
        """Text matched by `pattern` at the cursor, without advancing."""
        m = pattern.match(self.source, self.index)
        return m.group(0) if m else None

    def take(self, pattern: re.Pattern[str]) -> str | None:
        """Consume and return a match of `pattern` at the cursor, if any."""
        text = self.match(pattern)
        if text:
            self.advance(len(text))
        return text

    def span_from(self, start: SourcePosition) -> Span:
        return Span(start, self.position())


def new_cursor(source: str) -> Cursor:
    """Create a cursor at line 1, column 1, offset 0.

    Rejects text that is not valid Unicode (e.g. lone surrogates smuggled in
    via surrogateescape decoding) with a single LEX000 diagnostic.
    """
    try:
        source.encode("utf-8")
    except UnicodeEncodeError as exc:
        pos = SourcePosition(1, 1, 0)
        raise DiagnosticError(
            Diagnostic("error", "LEX000", f"invalid encoding: {exc.reason}", Span(pos, pos))
        ) from None
    return Cursor(source)

"""Scanning helpers shared by the three lexers."""

from __future__ import annotations

from .cursor import Cursor
from .diagnostics import error


def at_number(cursor: Cursor) -> bool:
    ch = cursor.peek()
    return ch.isdigit() or (ch == "." and cursor.peek(1).isdigit())


def scan_number(cursor: Cursor, malformed_code: str) -> tuple[str, int | float, bool]:
    """Consume an integer or real literal at the cursor.

    Integers are decimal digit runs. Reals need a digit on at least one side of
    the decimal point and accept an `e[+-]?digits` exponent. Returns
    (lexeme, value, is_real); raises `malformed_code` on a broken exponent.
    """
    start_pos = cursor.position()
    start = cursor.index
    is_real = False
    while cursor.peek().isdigit():
        cursor.advance()
    if cursor.peek() == "." and (cursor.index > start or cursor.peek(1).isdigit()):
        cursor.advance()
        while cursor.peek().isdigit():
            cursor.advance()
        is_real = True
    if cursor.peek() in ("e", "E"):
        after = 2 if cursor.peek(1) in ("+", "-") else 1
        if cursor.peek(after).isdigit():
            cursor.advance(after)
            while cursor.peek().isdigit():
                cursor.advance()
            is_real = True
        elif after == 2:
            cursor.advance(after)
            raise error(malformed_code, "malformed number: exponent has no digits",
                        cursor.span_from(start_pos))
        # A bare trailing 'e' is left for the identifier scanner.
    lexeme = cursor.source[start : cursor.index]
    return lexeme, (float(lexeme) if is_real else int(lexeme)), is_real


def scan_string(cursor: Cursor, unterminated_code: str) -> tuple[str, str]:
    """Consume a double-quoted string (no escape sequences). Returns (lexeme, text)."""
    start_pos = cursor.position()
    start = cursor.index
    cursor.advance()
    while not cursor.at_end() and cursor.peek() not in ('"', "\n"):
        cursor.advance()
    if cursor.peek() != '"':
        raise error(unterminated_code, "unterminated string", cursor.span_from(start_pos))
    cursor.advance()
    lexeme = cursor.source[start : cursor.index]
    return lexeme, lexeme[1:-1]

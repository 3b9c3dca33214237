"""Source positions and spans shared by all three frontends."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(eq=True, slots=True)
class SourcePosition:
    """A point in source text.

    line and column are 1-based; column counts Unicode scalar values.
    offset is a 0-based UTF-8 byte index.
    """

    line: int
    column: int
    offset: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(eq=True, slots=True)
class Span:
    """Half-open region of source text: [start, end)."""

    start: SourcePosition
    end: SourcePosition

    def __post_init__(self) -> None:
        if self.start.offset > self.end.offset:
            raise ValueError(f"span start {self.start} past end {self.end}")

    def __str__(self) -> str:
        return f"{self.start}-{self.end}"


def span_contains(outer: Span, inner: Span) -> bool:
    return outer.start.offset <= inner.start.offset and inner.end.offset <= outer.end.offset

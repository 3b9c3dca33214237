"""Diagnostics: error/warning records with stable codes, and their rendering."""

from __future__ import annotations

from dataclasses import dataclass

from .position import Span


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" or "warning"
    code: str      # stable short identifier, e.g. "LEX101"
    message: str
    span: Span


class DiagnosticError(Exception):
    """Raised on the first error diagnostic; parsing is fail-fast per file."""

    def __init__(self, diagnostic: Diagnostic):
        self.diagnostic = diagnostic
        super().__init__(f"{diagnostic.code}: {diagnostic.message} at {diagnostic.span.start}")

    @property
    def code(self) -> str:
        return self.diagnostic.code


def error(code: str, message: str, span: Span) -> DiagnosticError:
    return DiagnosticError(Diagnostic("error", code, message, span))


def render_diagnostic(diag: Diagnostic, source: str) -> str:
    """Render a diagnostic as a header line plus the offending line with a caret underline.

    A multi-line span is rendered on its first line only, with the caret range
    running to the end of that line.
    """
    start = diag.span.start
    header = f"{diag.severity} {diag.code}: {diag.message} at {start.line}:{start.column}"
    lines = source.splitlines()
    if not (1 <= start.line <= len(lines)):
        return header
    line_text = lines[start.line - 1]
    if diag.span.end.line == start.line:
        width = max(1, diag.span.end.column - start.column)
    else:
        width = max(1, len(line_text) - start.column + 1)
    caret = " " * (start.column - 1) + "^" * width
    return f"{header}\n{line_text}\n{caret}"

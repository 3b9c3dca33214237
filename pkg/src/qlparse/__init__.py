"""qlparse: parsers for three quantum programming languages.

One lexer/token/AST architecture shared by a gate-model QASM frontend, a
continuous-variable Blackbird frontend, and an annealer-targeted QMASM
frontend, plus QMASM static semantics: macro expansion, flattening to a
2-local Ising model, assertion checking, and exact ground-state solving.
"""

from .ast import AstNode, deserialize_ast, same_structure, serialize_ast
from .cursor import Cursor, new_cursor
from .diagnostics import Diagnostic, DiagnosticError, render_diagnostic
from .position import SourcePosition, Span
from .tokens import LexemeTable, Token, match_longest, reconstruct

__version__ = "0.1.0"

__all__ = [
    "AstNode", "Cursor", "Diagnostic", "DiagnosticError", "LexemeTable",
    "SourcePosition", "Span", "Token", "deserialize_ast", "match_longest",
    "new_cursor", "reconstruct", "render_diagnostic", "same_structure",
    "serialize_ast", "__version__",
]

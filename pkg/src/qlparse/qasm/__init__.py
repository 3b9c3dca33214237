"""Gate-model QASM frontend: lexer, parser, and source printer."""

from .lexer import TokenKind, lex
from .parser import BUILTIN_GATES, GateSignature, parse, parse_string
from .printer import to_source

__all__ = ["TokenKind", "lex", "parse", "parse_string", "to_source",
           "BUILTIN_GATES", "GateSignature"]

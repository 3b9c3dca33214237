"""Continuous-variable Blackbird frontend: lexer, parser, and source printer."""

from .lexer import TokenKind, lex
from .parser import OPERATORS, VARIABLE, OperatorSignature, parse, parse_expression, parse_string
from .printer import print_expr, to_source

__all__ = ["TokenKind", "lex", "parse", "parse_string", "parse_expression",
           "to_source", "print_expr", "OPERATORS", "OperatorSignature", "VARIABLE"]

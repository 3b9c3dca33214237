"""QMASM frontend and static semantics."""

from .ising import (GroundStateResult, IsingModel, QuboModel, SpinConfiguration,
                    brute_force_ground_states, energy, ising_to_qubo, qubo_to_ising)
from .lexer import TokenKind, lex
from .parser import parse, parse_string
from .printer import print_expr, to_source
from .semantics import (ClassicalValue, Iterator, MacroEnvironment, QuantumSymbol,
                        Range, check_assertions, elaborate, eval_expr, expand_macros,
                        flatten_to_ising, resolve_includes)

__all__ = [
    "TokenKind", "lex", "parse", "parse_string", "to_source", "print_expr",
    "resolve_includes", "expand_macros", "elaborate", "flatten_to_ising",
    "check_assertions", "eval_expr",
    "IsingModel", "SpinConfiguration", "GroundStateResult", "QuboModel",
    "energy", "brute_force_ground_states", "ising_to_qubo", "qubo_to_ising",
    "ClassicalValue", "Range", "Iterator", "MacroEnvironment", "QuantumSymbol",
]

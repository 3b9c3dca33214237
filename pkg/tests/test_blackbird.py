"""Blackbird frontend: lexing (the ** lookahead), parsing, arities, printing."""

import random

import pytest

from qlparse import blackbird
from qlparse.ast import AstNode, same_structure
from qlparse.blackbird.lexer import TokenKind
from qlparse.blackbird.parser import OPERATORS, VARIABLE
from qlparse.diagnostics import DiagnosticError
from qlparse.position import SourcePosition, Span
from qlparse.tokens import reconstruct

from conftest import BLACKBIRD_FILES, read


def kinds(source):
    return [t.kind for t in blackbird.lex(source) if t.kind is not TokenKind.Eof]


class TestLexer:
    def test_power_is_one_token(self):
        tokens = [t for t in blackbird.lex("2**3") if t.kind is not TokenKind.Eof]
        assert [t.kind for t in tokens] == [TokenKind.Int, TokenKind.Power, TokenKind.Int]
        assert tokens[1].lexeme == "**"

    def test_power_and_times_have_equal_token_counts(self):
        assert len(blackbird.lex("a**b")) == len(blackbird.lex("a*b")) == 4  # incl. Eof

    def test_statement_tokens(self):
        assert kinds("Sgate(0.5) | 0") == [
            TokenKind.Id, TokenKind.Lbrac, TokenKind.Real, TokenKind.Rbrac,
            TokenKind.Pipe, TokenKind.Int,
        ]

    def test_comment_line_leaves_only_newline(self):
        assert kinds("# comment\n") == [TokenKind.Newline]

    def test_complex_literal(self):
        tokens = blackbird.lex("2j")
        assert tokens[0].kind is TokenKind.Complex and tokens[0].value == 2.0

    def test_unknown_character(self):
        with pytest.raises(DiagnosticError) as exc:
            blackbird.lex("Sgate(0.5) ; 0")
        assert exc.value.code == "LEX201"

    def test_malformed_number(self):
        with pytest.raises(DiagnosticError) as exc:
            blackbird.lex("float x = 2e+")
        assert exc.value.code == "LEX202"

    @pytest.mark.parametrize("path", BLACKBIRD_FILES, ids=lambda p: p.name)
    def test_reconstruction(self, path):
        source = read(path)
        assert reconstruct(source, blackbird.lex(source)) == source

    @pytest.mark.parametrize("path", BLACKBIRD_FILES, ids=lambda p: p.name)
    def test_span_ordering(self, path):
        tokens = blackbird.lex(read(path))
        for earlier, later in zip(tokens, tokens[1:]):
            assert earlier.span.end.offset <= later.span.start.offset


class TestExpressions:
    def expr(self, source):
        return blackbird.parse_expression(blackbird.lex(source))

    def test_precedence(self):
        node = self.expr("1+2*3")
        assert node.kind == "Add"
        assert node.children[1].kind == "Mul"

    def test_power_right_associative(self):
        node = self.expr("2**3**2")
        assert node.kind == "Pow"
        assert node.children[0].attrs["value"] == 2
        assert node.children[1].kind == "Pow"

    def test_unary_minus_groups(self):
        node = self.expr("-(a+b)")
        assert node.kind == "Neg"
        assert node.children[0].kind == "Add"

    def test_unary_minus_folds_into_literals(self):
        assert self.expr("-3").attrs["value"] == -3
        assert self.expr("-0.5").attrs["value"] == -0.5

    def test_power_binds_tighter_than_unary(self):
        node = self.expr("-2**2")
        assert node.kind == "Neg"
        assert node.children[0].kind == "Pow"

    @pytest.mark.parametrize("source,code", [
        ("Sgate((0.5 | 0", "PAR201"),
        ("float x = 1 +", "PAR202"),
    ])
    def test_errors(self, source, code):
        with pytest.raises(DiagnosticError) as exc:
            blackbird.parse_string(source)
        assert exc.value.code == code


class TestParser:
    def test_vacuum_preparation(self):
        program = blackbird.parse_string("Vac | 0")
        stmt = program.children[0]
        assert stmt.attrs["name"] == "Vac"
        assert stmt.child("Args").children == []
        assert [m.attrs["value"] for m in stmt.child("Modes").children] == [0]

    def test_beam_splitter_two_modes(self):
        program = blackbird.parse_string("BSgate(0.7853, 0) | (0, 1)")
        stmt = program.children[0]
        assert len(stmt.child("Args").children) == 2
        assert [m.attrs["value"] for m in stmt.child("Modes").children] == [0, 1]

    def test_empty_program(self):
        assert blackbird.parse_string("").children == []

    def test_all_24_heads_parse(self):
        source = read(BLACKBIRD_FILES[1])  # 02_all_operators.xbb
        program = blackbird.parse_string(source)
        heads = [s.attrs["name"] for s in program.children if s.kind == "ModeStatement"]
        assert sorted(set(heads)) == sorted(OPERATORS)
        assert len(heads) == 24

    @pytest.mark.parametrize("source,code", [
        ("Fouriergate(1) | 0", "PAR204"),
        ("BSgate(0.5) | (0, 1)", "PAR204"),
        ("CXgate(0.5) | 0", "PAR205"),
        ("Sgate(0.5) | (0, 0)", "PAR205"),
        ("Boguscate(1) | 0", "PAR203"),
        ("MeasureFock | 0", "PAR203"),
        ("Vac | 0\nname late", "PAR206"),
        ("version 1.0e3", "PAR206"),
        ("array A = [[1, 2], [3]]", "PAR208"),
    ])
    def test_errors(self, source, code):
        with pytest.raises(DiagnosticError) as exc:
            blackbird.parse_string(source)
        assert exc.value.code == code

    def test_headers_recorded(self):
        program = blackbird.parse_string("name prog\nversion 1.0\ntarget gaussian (shots=5)\n")
        assert [c.kind for c in program.children] == ["NameHeader", "VersionHeader", "Target"]
        assert program.children[1].attrs == {"major": 1, "minor": 0}
        assert program.children[2].children[0].attrs["name"] == "shots"

    def test_composition_equals_parse_string(self):
        for path in BLACKBIRD_FILES:
            source = read(path)
            assert same_structure(blackbird.parse(blackbird.lex(source)),
                                  blackbird.parse_string(source))


def random_expression(rng: random.Random, depth: int) -> AstNode:
    """Random expression tree in parser normal form (no Neg around literals)."""
    pos = SourcePosition(1, 1, 0)
    span = Span(pos, pos)
    if depth == 0 or rng.random() < 0.25:
        choice = rng.randrange(4)
        if choice == 0:
            return AstNode("Int", span, {"value": rng.randint(-50, 50)})
        if choice == 1:
            return AstNode("Real", span, {"value": round(rng.uniform(-4, 4), 3)})
        if choice == 2:
            return AstNode("Name", span, {"id": rng.choice("abxyz")})
        return AstNode("Complex", span, {"imag": round(rng.uniform(0, 4), 3)})
    kind = rng.choice(["Add", "Sub", "Mul", "Div", "Pow", "Neg"])
    if kind == "Neg":
        child = random_expression(rng, depth - 1)
        if child.kind in ("Int", "Real"):  # parser folds these; stay in normal form
            child = AstNode("Name", span, {"id": "n"})
        return AstNode("Neg", span, {}, [child])
    return AstNode(kind, span, {},
                   [random_expression(rng, depth - 1), random_expression(rng, depth - 1)])


class TestPrinter:
    @pytest.mark.parametrize("path", BLACKBIRD_FILES, ids=lambda p: p.name)
    def test_print_reparse_round_trip(self, path):
        tree = blackbird.parse_string(read(path))
        assert same_structure(tree, blackbird.parse_string(blackbird.to_source(tree)))

    def test_generated_expression_round_trips(self):
        rng = random.Random(20240817)
        for _ in range(500):
            tree = random_expression(rng, rng.randint(0, 6))
            printed = blackbird.print_expr(tree)
            reparsed = blackbird.parse_expression(blackbird.lex(printed))
            assert same_structure(tree, reparsed), printed

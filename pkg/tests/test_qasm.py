"""QASM frontend: lexing, parsing, arity checking, printing."""

import pytest

from qlparse import qasm
from qlparse.ast import same_structure
from qlparse.diagnostics import DiagnosticError
from qlparse.qasm.lexer import TokenKind
from qlparse.qasm.parser import BUILTIN_GATES
from qlparse.tokens import reconstruct

from conftest import QASM_FILES, read


def kinds(source):
    return [t.kind for t in qasm.lex(source) if t.kind is not TokenKind.Eof]


def code_of(excinfo):
    return excinfo.value.code


class TestLexer:
    def test_indexing_statement(self):
        assert kinds("x q[0];") == [
            TokenKind.Id, TokenKind.Id, TokenKind.Lsqbrac, TokenKind.Int,
            TokenKind.Rsqbrac, TokenKind.Semicolon,
        ]

    def test_arrow_is_one_token(self):
        ks = kinds("measure q[0] -> c[0];")
        assert ks.count(TokenKind.Arrow) == 1
        assert TokenKind.Minus not in ks

    def test_unknown_character(self):
        with pytest.raises(DiagnosticError) as exc:
            qasm.lex("q@")
        assert code_of(exc) == "LEX101"

    def test_malformed_number(self):
        with pytest.raises(DiagnosticError) as exc:
            qasm.lex("u1(1.5e+) q;")
        assert code_of(exc) == "LEX102"

    def test_comments_are_trivia(self):
        assert kinds("// nothing here\n") == []

    @pytest.mark.parametrize("path", QASM_FILES, ids=lambda p: p.name)
    def test_reconstruction(self, path):
        source = read(path)
        assert reconstruct(source, qasm.lex(source)) == source

    @pytest.mark.parametrize("path", QASM_FILES, ids=lambda p: p.name)
    def test_span_ordering(self, path):
        tokens = qasm.lex(read(path))
        offsets = [t.span.start.offset for t in tokens]
        assert offsets == sorted(offsets)
        for earlier, later in zip(tokens, tokens[1:]):
            assert earlier.span.end.offset <= later.span.start.offset


class TestParser:
    def test_two_qubit_gate(self):
        program = qasm.parse_string("qreg q[2]; cx q[0], q[1];")
        decl, apply = program.children
        assert decl.kind == "RegisterDecl" and decl.attrs["size"] == 2
        assert apply.attrs["name"] == "cx"
        targets = apply.child("Targets").children
        assert [(t.attrs["name"], t.attrs["index"]) for t in targets] == [("q", 0), ("q", 1)]

    def test_custom_gate_resolves(self):
        program = qasm.parse_string(
            "gate mygate(theta) a { u1(theta) a; } qreg q[1]; mygate(0.5) q[0];")
        assert [c.kind for c in program.children] == ["GateDef", "RegisterDecl", "GateApply"]

    def test_version_header(self):
        program = qasm.parse_string("OPENQASM 2.0; qreg q[1]; h q[0];")
        assert program.children[0].kind == "Version"
        assert program.children[0].attrs == {"major": 2, "minor": 0}
        assert len(program.children) == 3

    def test_empty_program(self):
        program = qasm.parse_string("")
        assert program.kind == "Program" and program.children == []

    @pytest.mark.parametrize("source,code", [
        ("qreg q[1]; cx q[0];", "PAR103"),
        ("qreg q[1]; u1 q[0];", "PAR103"),
        ("qreg q[1]; x(0.5) q[0];", "PAR103"),
        ("qreg q[1]; reset q[0], q[0];", "PAR103"),
        ("qreg q[1]; bogus q[0];", "PAR102"),
        ("qreg q[1]; x r[0];", "PAR104"),
        ("qreg q[1]; x q[5];", "PAR105"),
        ("qreg q[1]; x q;", "PAR101"),
        ("qreg q[1]; qreg q[2];", "PAR107"),
        ("OPENQASM 3.0;", "PAR106"),
        ("qreg q[1]; OPENQASM 2.0;", "PAR101"),
        ("creg c[1]; if (d == 1) x q[0];", "PAR104"),
        ("gate g a { measure a -> a; }", "PAR101"),
    ])
    def test_errors(self, source, code):
        with pytest.raises(DiagnosticError) as exc:
            qasm.parse_string(source)
        assert code_of(exc) == code

    def test_version_must_be_first(self):
        with pytest.raises(DiagnosticError):
            qasm.parse_string("qreg q[1]; OPENQASM 2.0;")

    def test_composition_equals_parse_string(self):
        # Oracle: lex-then-parse must equal the one-call form.
        for path in QASM_FILES:
            source = read(path)
            assert same_structure(qasm.parse(qasm.lex(source)), qasm.parse_string(source))


def apply_line(name, sig):
    args = "" if sig.param_count == 0 else \
        "(" + ", ".join("0.5" for _ in range(sig.param_count)) + ")"
    targets = ", ".join(f"q[{i}]" for i in range(sig.qubit_count))
    return f"{name}{args} {targets};"


class TestGateTable:
    def test_table_is_exactly_the_19_names(self):
        names = {"x", "y", "z", "u1", "u2", "u3", "s", "sdg", "h", "tdg", "cx", "cy",
                 "cz", "t", "ccx", "reset", "cu1", "ccy", "ccz"}
        assert set(BUILTIN_GATES) == names

    @pytest.mark.parametrize("name", sorted(BUILTIN_GATES), ids=str)
    def test_correct_arity_parses(self, name):
        sig = BUILTIN_GATES[name]
        qasm.parse_string(f"qreg q[3];\n{apply_line(name, sig)}")

    @pytest.mark.parametrize("name", sorted(BUILTIN_GATES), ids=str)
    def test_every_off_by_one_variant_fails(self, name):
        sig = BUILTIN_GATES[name]
        variants = []
        qubits = lambda n: ", ".join(f"q[{i}]" for i in range(n))
        params = lambda n: "" if n == 0 else "(" + ", ".join("0.5" for _ in range(n)) + ")"
        variants.append(f"{name}{params(sig.param_count)} {qubits(sig.qubit_count + 1)};")
        variants.append(f"{name}{params(sig.param_count)} {qubits(sig.qubit_count - 1)};")
        variants.append(f"{name}{params(sig.param_count + 1)} {qubits(sig.qubit_count)};")
        if sig.param_count > 0:
            variants.append(f"{name}{params(sig.param_count - 1)} {qubits(sig.qubit_count)};")
        for line in variants:
            with pytest.raises(DiagnosticError) as exc:
                qasm.parse_string(f"qreg q[4];\n{line}")
            assert code_of(exc) == "PAR103", line


class TestPrinter:
    @pytest.mark.parametrize("path", QASM_FILES, ids=lambda p: p.name)
    def test_print_reparse_round_trip(self, path):
        tree = qasm.parse_string(read(path))
        printed = qasm.to_source(tree)
        assert same_structure(tree, qasm.parse_string(printed))

    def test_expression_precedence_is_preserved(self):
        source = "qreg q[1]; u3(1 + 2 * 3, (1 + 2) * 3, 2^3^2) q[0];"
        tree = qasm.parse_string(source)
        args = tree.children[1].child("Args").children
        assert args[0].kind == "Add" and args[0].children[1].kind == "Mul"
        assert args[1].kind == "Mul" and args[1].children[0].kind == "Add"
        assert args[2].kind == "Pow" and args[2].children[1].kind == "Pow"
        assert same_structure(tree, qasm.parse_string(qasm.to_source(tree)))

"""Acceptance suite: one test per top-level criterion, at its stated tolerance.

Each test prints a PASS line on success (run with `pytest -s` to see them
live); a failed assertion is the FAIL signal and carries the detail.
"""

import itertools
import json
import random
import time

import pytest

from qlparse import blackbird, qasm, qmasm
from qlparse.ast import same_structure
from qlparse.cli import main
from qlparse.diagnostics import DiagnosticError
from qlparse.qasm.parser import BUILTIN_GATES
from qlparse.qmasm.ising import (IsingModel, SpinConfiguration, brute_force_ground_states,
                                 energy, ising_to_qubo, qubo_to_ising)
from qlparse.qmasm.semantics import elaborate, expand_macros
from qlparse.tokens import reconstruct

from conftest import BLACKBIRD_FILES, QASM_FILES, QMASM_FILES, read
from test_blackbird import random_expression as random_blackbird_expression
from test_ising import oracle_energy, oracle_ground_states
from test_qmasm_frontend import random_expression as random_qmasm_expression


def report(name: str) -> None:
    print(f"PASS: {name}")


def cli(*argv) -> int:
    return main(list(argv))


def test_gate_coverage_qasm(capsys, tmp_path):
    started = time.perf_counter()
    lines = ["qreg q[4];"]
    for name, sig in sorted(BUILTIN_GATES.items()):
        params = "" if sig.param_count == 0 else \
            "(" + ", ".join("0.5" for _ in range(sig.param_count)) + ")"
        targets = ", ".join(f"q[{i}]" for i in range(sig.qubit_count))
        lines.append(f"{name}{params} {targets};")
    program = tmp_path / "all_gates.qasm"
    program.write_text("\n".join(lines) + "\n")
    assert cli("parse", "--lang", "qasm", "--format", "json", str(program)) == 0

    def variant_lines(name, sig):
        params = lambda n: "" if n == 0 else "(" + ", ".join("0.5" for _ in range(n)) + ")"
        targets = lambda n: ", ".join(f"q[{i}]" for i in range(n))
        yield f"{name}{params(sig.param_count)} {targets(sig.qubit_count + 1)};"
        yield f"{name}{params(sig.param_count)} {targets(sig.qubit_count - 1)};"
        yield f"{name}{params(sig.param_count + 1)} {targets(sig.qubit_count)};"
        if sig.param_count:
            yield f"{name}{params(sig.param_count - 1)} {targets(sig.qubit_count)};"

    for name, sig in sorted(BUILTIN_GATES.items()):
        for line in variant_lines(name, sig):
            with pytest.raises(DiagnosticError) as exc:
                qasm.parse_string(f"qreg q[5];\n{line}")
            assert exc.value.code == "PAR103", line
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"gate coverage took {elapsed:.3f}s"
    capsys.readouterr()  # drop the CLI's stdout payload from the capture buffer
    report(f"gate coverage (19 QASM gates, off-by-one -> PAR103) in {elapsed:.3f}s")


def test_operator_coverage_blackbird():
    started = time.perf_counter()
    source = read(next(p for p in BLACKBIRD_FILES if "all_operators" in p.name))
    program = blackbird.parse_string(source)
    heads = [s.attrs["name"] for s in program.children if s.kind == "ModeStatement"]
    assert len(heads) == 24 and set(heads) == set(blackbird.OPERATORS)
    for bogus in ("Qgate(1) | 0", "MeasureFock | 0", "Sgat(1) | 0", "vac | 0"):
        with pytest.raises(DiagnosticError) as exc:
            blackbird.parse_string(bogus)
        assert exc.value.code == "PAR203", bogus
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    report(f"operator coverage (17 operators + 7 preparations, unknown -> PAR203) "
           f"in {elapsed:.3f}s")


def test_power_lookahead():
    starred = [t for t in blackbird.lex("a**b") if t.kind.name != "Eof"]
    timesed = [t for t in blackbird.lex("a*b") if t.kind.name != "Eof"]
    assert len(starred) == 3
    assert len(timesed) == 3
    assert starred[1].kind is blackbird.TokenKind.Power
    assert starred[1].lexeme == "**"
    report("lookahead (a**b and a*b both lex to exactly 3 tokens, Power lexeme '**')")


def test_reconstruction_property():
    cases = [(QASM_FILES, qasm.lex), (BLACKBIRD_FILES, blackbird.lex),
             (QMASM_FILES, qmasm.lex)]
    total = 0
    for files, lexer in cases:
        assert len(files) >= 10, "corpus must have at least 10 files per language"
        for path in files:
            source = read(path)
            assert reconstruct(source, lexer(source)) == source, path.name
            total += 1
    report(f"reconstruction (token lexemes + trivia are byte-exact on {total} corpus files)")


def test_round_trip_property():
    frontends = [(QASM_FILES, qasm), (BLACKBIRD_FILES, blackbird), (QMASM_FILES, qmasm)]
    for files, frontend in frontends:
        for path in files:
            tree = frontend.parse_string(read(path))
            printed = frontend.to_source(tree)
            assert same_structure(tree, frontend.parse_string(printed)), path.name

    rng = random.Random(271828)
    for _ in range(1000):
        tree = random_blackbird_expression(rng, rng.randint(0, 6))
        printed = blackbird.print_expr(tree)
        assert same_structure(tree, blackbird.parse_expression(blackbird.lex(printed))), printed
    for _ in range(1000):
        tree = random_qmasm_expression(rng, rng.randint(0, 6))
        printed = qmasm.print_expr(tree)
        reparsed = qmasm.parse_string(f"!assert {printed}\n").children[0].children[0]
        assert same_structure(tree, reparsed), printed
    report("round-trip (corpus + 2x1000 generated expression trees of depth <= 6)")


def test_qmasm_feature_checklist():
    checklist = next(p for p in QMASM_FILES if "checklist" in p.name)
    program = qmasm.parse_string(read(checklist))
    kinds_seen = {c.kind for c in program.children}
    wanted = {"Weight", "Coupling", "Chain", "AntiChain", "Equiv", "Pin", "MacroDef",
              "UseMacro", "Include", "Assert", "For", "If", "Let"}
    assert wanted <= kinds_seen

    body = "a 1\nb 1\na b -1\n"
    for k in (1, 2, 3, 5):
        instances = " ".join(f"i{m}" for m in range(k))
        source = f"!begin_macro m\n{body}!end_macro m\n!use_macro m {instances}\n"
        flat = expand_macros(qmasm.parse_string(source))
        assert len(flat) == k * 3, f"k={k}"
    report("QMASM feature checklist (all statement kinds; expansion is exactly k*b)")


def test_ising_correctness():
    started = time.perf_counter()
    rng = random.Random(160494)
    for trial in range(100):
        n = rng.randint(1, 10)
        syms = [f"s{i}" for i in range(n)]
        model = IsingModel()
        for s in syms:
            model.h[s] = rng.uniform(-2, 2)
        for a, b in itertools.combinations(syms, 2):
            if rng.random() < 0.5:
                model.J[(a, b)] = rng.uniform(-2, 2)

        config = SpinConfiguration({s: rng.choice((-1, 1)) for s in syms})
        assert abs(energy(model, config) - oracle_energy(model, config.assignment)) < 1e-12

        expected = oracle_ground_states(model)
        assert expected is not None
        best, states, feasible, oracle_syms = expected
        result = brute_force_ground_states(model)
        assert abs(result.min_energy - best) <= 1e-9
        assert result.feasible_count == feasible
        assert [c.spins(oracle_syms) for c in result.configurations] == sorted(states)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"ising correctness took {elapsed:.3f}s"
    report(f"ising correctness (100 random models vs summation + enumeration oracles) "
           f"in {elapsed:.3f}s")


def test_constraint_semantics():
    ferro = IsingModel(J={("a", "b"): -1.0})
    result = brute_force_ground_states(ferro)
    assert result.min_energy == pytest.approx(-1.0, abs=1e-9)
    assert [c.assignment for c in result.configurations] == [
        {"a": -1, "b": -1}, {"a": 1, "b": 1}]

    pinned = IsingModel(J={("a", "b"): -1.0}, pins={"a": True})
    result = brute_force_ground_states(pinned)
    assert [c.assignment for c in result.configurations] == [{"a": 1, "b": 1}]

    frustrated = IsingModel(J={("a", "b"): -1.0}, antichains={("a", "b")})
    result = brute_force_ground_states(frustrated)
    assert result.min_energy == pytest.approx(1.0, abs=1e-9)
    assert [c.assignment for c in result.configurations] == [
        {"a": -1, "b": 1}, {"a": 1, "b": -1}]
    report("constraint semantics (ferromagnet degeneracy, pin filtering, anti-chain at +1)")


def test_qubo_equivalence():
    rng = random.Random(57721)
    for trial in range(50):
        n = rng.randint(1, 8)
        syms = [f"s{i}" for i in range(n)]
        model = IsingModel()
        for s in syms:
            model.h[s] = rng.uniform(-2, 2)
        for a, b in itertools.combinations(syms, 2):
            if rng.random() < 0.5:
                model.J[(a, b)] = rng.uniform(-2, 2)
        qubo = ising_to_qubo(model)
        for spins in itertools.product((-1, 1), repeat=n):
            assignment = dict(zip(syms, spins))
            binary = {s: (v + 1) // 2 for s, v in assignment.items()}
            e_ising = energy(model, SpinConfiguration(assignment))
            assert abs(e_ising - float(qubo.energy(binary))) < 1e-12
        back = qubo_to_ising(qubo)
        for s in set(model.h) | set(back.h):
            assert back.h.get(s, 0.0) == model.h.get(s, 0.0), s
        assert back.J == model.J
    report("QUBO equivalence (exhaustive energies to 1e-12; round-trip coefficient-exact)")


def test_throughput_sanity():
    gates = ["h q[0];", "cx q[0], q[1];", "u3(0.1, 0.2, 0.3) q[2];",
             "ccx q[0], q[1], q[2];", "measure q[3] -> c[3];", "t q[3];"]
    lines = ["OPENQASM 2.0;", "qreg q[8];", "creg c[8];"]
    while len(lines) < 10_000:
        lines.append(gates[len(lines) % len(gates)])
    source = "\n".join(lines) + "\n"
    started = time.perf_counter()
    program = qasm.parse_string(source)
    elapsed = time.perf_counter() - started
    assert len(program.children) == 10_000
    assert elapsed < 1.0, f"10k-line parse took {elapsed:.3f}s"
    report(f"throughput (10,000-line QASM parsed in {elapsed:.3f}s)")

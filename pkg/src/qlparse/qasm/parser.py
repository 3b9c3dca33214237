"""Recursive-descent parser for QASM producing the uniform AST.

Node kinds: Program, Version, RegisterDecl, GateDef, GateApply, Measure,
Reset, Barrier, If, Include, plus the expression kinds (Int, Real, Pi, Name,
Add, Sub, Mul, Div, Pow, Neg) and the wrappers Params/Qubits/Body/Args/Targets
and RegRef for indexed register references.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..ast import AstNode
from ..diagnostics import error
from ..position import Span
from ..tokens import Token, TokenStream, describe
from .lexer import TokenKind, lex


@dataclass(frozen=True)
class GateSignature:
    name: str
    param_count: int
    qubit_count: int


# Built-in gate arities follow the standard OpenQASM 2.0 library; `reset` is a
# statement but keeps a row here so arity errors stay uniform (PAR103).
BUILTIN_GATES = {
    sig.name: sig
    for sig in [
        GateSignature("x", 0, 1), GateSignature("y", 0, 1), GateSignature("z", 0, 1),
        GateSignature("s", 0, 1), GateSignature("sdg", 0, 1), GateSignature("h", 0, 1),
        GateSignature("t", 0, 1), GateSignature("tdg", 0, 1),
        GateSignature("u1", 1, 1), GateSignature("u2", 2, 1), GateSignature("u3", 3, 1),
        GateSignature("cx", 0, 2), GateSignature("cy", 0, 2), GateSignature("cz", 0, 2),
        GateSignature("cu1", 1, 2),
        GateSignature("ccx", 0, 3), GateSignature("ccy", 0, 3), GateSignature("ccz", 0, 3),
        GateSignature("reset", 0, 1),
    ]
}


class Parser:
    def __init__(self, tokens: list[Token]):
        self.ts = TokenStream(tokens, TokenKind.Eof, "PAR101")
        self.qregs: dict[str, int] = {}
        self.cregs: dict[str, int] = {}
        self.gates: dict[str, GateSignature] = dict(BUILTIN_GATES)

    def parse_program(self) -> AstNode:
        first = self.ts.peek().span.start
        statements = []
        if self.ts.at(TokenKind.Openqasm):
            statements.append(self.version_header())
        while not self.ts.at_end():
            statements.append(self.statement())
        end = self.ts.peek().span.end
        return AstNode("Program", Span(first, end), {}, statements)

    def version_header(self) -> AstNode:
        kw = self.ts.next()
        num = self.ts.peek()
        if num.kind not in (TokenKind.Real, TokenKind.Int) or num.lexeme != "2.0":
            raise error("PAR106", f"unsupported QASM version {describe(num)}; only 2.0 is accepted",
                        num.span)
        self.ts.next()
        end = self.ts.expect(TokenKind.Semicolon)
        return AstNode("Version", Span(kw.span.start, end.span.end), {"major": 2, "minor": 0})

    def statement(self) -> AstNode:
        tok = self.ts.peek()
        if tok.kind is TokenKind.Openqasm:
            raise error("PAR101", "version header must be the first statement", tok.span)
        if tok.kind is TokenKind.Include:
            return self.include()
        if tok.kind in (TokenKind.Qreg, TokenKind.Creg):
            return self.register_decl()
        if tok.kind is TokenKind.Gate:
            return self.gate_def()
        if tok.kind in (TokenKind.Measure, TokenKind.Reset, TokenKind.Id, TokenKind.Barrier,
                        TokenKind.If):
            return self.command()
        raise error("PAR101", f"expected a statement, found {describe(tok)}", tok.span)

    def include(self) -> AstNode:
        kw = self.ts.next()
        path = self.ts.expect(TokenKind.Str, "an include path string")
        end = self.ts.expect(TokenKind.Semicolon)
        return AstNode("Include", Span(kw.span.start, end.span.end), {"path": path.value})

    def register_decl(self) -> AstNode:
        kw = self.ts.next()
        name = self.ts.expect(TokenKind.Id, "a register name")
        self.ts.expect(TokenKind.Lsqbrac)
        size = self.ts.expect(TokenKind.Int, "a register size")
        self.ts.expect(TokenKind.Rsqbrac)
        end = self.ts.expect(TokenKind.Semicolon)
        if name.lexeme in self.qregs or name.lexeme in self.cregs:
            raise error("PAR107", f"register {name.lexeme!r} is already declared", name.span)
        table = self.qregs if kw.kind is TokenKind.Qreg else self.cregs
        table[name.lexeme] = size.value
        reg_kind = "quantum" if kw.kind is TokenKind.Qreg else "classical"
        return AstNode("RegisterDecl", Span(kw.span.start, end.span.end),
                       {"kind": reg_kind, "name": name.lexeme, "size": size.value})

    def gate_def(self) -> AstNode:
        kw = self.ts.next()
        name = self.ts.expect(TokenKind.Id, "a gate name")
        if name.lexeme in self.gates:
            raise error("PAR107", f"gate {name.lexeme!r} is already defined", name.span)
        params: list[Token] = []
        if self.ts.accept(TokenKind.Lbrac):
            if not self.ts.at(TokenKind.Rbrac):
                params.append(self.ts.expect(TokenKind.Id, "a parameter name"))
                while self.ts.accept(TokenKind.Comma):
                    params.append(self.ts.expect(TokenKind.Id, "a parameter name"))
            self.ts.expect(TokenKind.Rbrac)
        qubits = [self.ts.expect(TokenKind.Id, "a qubit argument name")]
        while self.ts.accept(TokenKind.Comma):
            qubits.append(self.ts.expect(TokenKind.Id, "a qubit argument name"))
        self.ts.expect(TokenKind.Lcurl)
        param_names = [p.lexeme for p in params]
        qubit_names = [q.lexeme for q in qubits]
        body = []
        while not self.ts.at(TokenKind.Rcurl):
            tok = self.ts.peek()
            if tok.kind is not TokenKind.Id:
                raise error("PAR101", f"expected a gate application, found {describe(tok)}",
                            tok.span)
            body.append(self.gate_apply(scope=(param_names, qubit_names)))
        close = self.ts.expect(TokenKind.Rcurl)
        self.gates[name.lexeme] = GateSignature(name.lexeme, len(params), len(qubits))
        span = Span(kw.span.start, close.span.end)
        children = [
            _wrap("Params", [_name(p) for p in params], span),
            _wrap("Qubits", [_name(q) for q in qubits], span),
            AstNode("Body", span, {}, body),
        ]
        return AstNode("GateDef", span, {"name": name.lexeme}, children)

    def command(self) -> AstNode:
        """A gate application, measure, reset, barrier, or if statement."""
        tok = self.ts.peek()
        if tok.kind is TokenKind.Measure:
            return self.measure()
        if tok.kind is TokenKind.Reset:
            return self.reset()
        if tok.kind is TokenKind.Barrier:
            return self.barrier()
        if tok.kind is TokenKind.If:
            return self.if_statement()
        return self.gate_apply(scope=None)

    def measure(self) -> AstNode:
        kw = self.ts.next()
        src = self.target_ref(quantum=True)
        self.ts.expect(TokenKind.Arrow)
        dst = self.target_ref(quantum=False)
        end = self.ts.expect(TokenKind.Semicolon)
        return AstNode("Measure", Span(kw.span.start, end.span.end), {}, [src, dst])

    def reset(self) -> AstNode:
        kw = self.ts.next()
        args: list[AstNode] = []
        if self.ts.accept(TokenKind.Lbrac):
            if not self.ts.at(TokenKind.Rbrac):
                args.append(self.expression(None))
                while self.ts.accept(TokenKind.Comma):
                    args.append(self.expression(None))
            self.ts.expect(TokenKind.Rbrac)
        targets = self.target_list()
        end = self.ts.expect(TokenKind.Semicolon)
        if args:
            raise error("PAR103", f"reset takes 0 parameter(s), got {len(args)}", kw.span)
        if len(targets) != 1:
            raise error("PAR103", f"reset takes 1 qubit(s), got {len(targets)}", kw.span)
        return AstNode("Reset", Span(kw.span.start, end.span.end), {}, targets)

    def barrier(self) -> AstNode:
        kw = self.ts.next()
        targets = [self.target_ref(quantum=True)]
        while self.ts.accept(TokenKind.Comma):
            targets.append(self.target_ref(quantum=True))
        end = self.ts.expect(TokenKind.Semicolon)
        return AstNode("Barrier", Span(kw.span.start, end.span.end), {}, targets)

    def if_statement(self) -> AstNode:
        kw = self.ts.next()
        self.ts.expect(TokenKind.Lbrac)
        reg = self.ts.expect(TokenKind.Id, "a classical register name")
        if reg.lexeme not in self.cregs:
            raise error("PAR104", f"{reg.lexeme!r} is not a declared classical register", reg.span)
        self.ts.expect(TokenKind.EqEq)
        value = self.ts.expect(TokenKind.Int, "a comparison integer")
        self.ts.expect(TokenKind.Rbrac)
        tok = self.ts.peek()
        if tok.kind in (TokenKind.Measure, TokenKind.Reset, TokenKind.Id):
            guarded = self.command()
        else:
            raise error("PAR101",
                        f"expected a guarded gate application, measure, or reset, found {describe(tok)}",
                        tok.span)
        return AstNode("If", Span(kw.span.start, guarded.span.end),
                       {"register": reg.lexeme, "value": value.value}, [guarded])

    def gate_apply(self, scope: tuple[list[str], list[str]] | None) -> AstNode:
        """`scope` is (param names, qubit arg names) inside a gate body, else None."""
        name = self.ts.expect(TokenKind.Id, "a gate name")
        sig = self.gates.get(name.lexeme)
        if sig is None:
            raise error("PAR102", f"unknown gate {name.lexeme!r}", name.span)
        args: list[AstNode] = []
        if self.ts.accept(TokenKind.Lbrac):
            if not self.ts.at(TokenKind.Rbrac):
                args.append(self.expression(scope))
                while self.ts.accept(TokenKind.Comma):
                    args.append(self.expression(scope))
            self.ts.expect(TokenKind.Rbrac)
        if scope is None:
            targets = self.target_list()
        else:
            targets = []
            if not self.ts.at(TokenKind.Semicolon):
                targets.append(self.body_target(scope[1]))
                while self.ts.accept(TokenKind.Comma):
                    targets.append(self.body_target(scope[1]))
        end = self.ts.expect(TokenKind.Semicolon)
        if len(args) != sig.param_count:
            raise error("PAR103",
                        f"{name.lexeme} takes {sig.param_count} parameter(s), got {len(args)}",
                        name.span)
        if len(targets) != sig.qubit_count:
            raise error("PAR103",
                        f"{name.lexeme} takes {sig.qubit_count} qubit(s), got {len(targets)}",
                        name.span)
        span = Span(name.span.start, end.span.end)
        children = [_wrap("Args", args, span), _wrap("Targets", targets, span)]
        return AstNode("GateApply", span, {"name": name.lexeme}, children)

    def target_list(self) -> list[AstNode]:
        """Possibly-empty comma-separated indexed targets; arity is checked by callers
        so that too-few-targets fails with PAR103, not a token error."""
        targets: list[AstNode] = []
        if not self.ts.at(TokenKind.Semicolon):
            targets.append(self.target_ref(quantum=True))
            while self.ts.accept(TokenKind.Comma):
                targets.append(self.target_ref(quantum=True))
        return targets

    def target_ref(self, quantum: bool) -> AstNode:
        name = self.ts.expect(TokenKind.Id, "a register reference")
        table = self.qregs if quantum else self.cregs
        if name.lexeme not in table:
            which = "quantum" if quantum else "classical"
            raise error("PAR104", f"{name.lexeme!r} is not a declared {which} register", name.span)
        self.ts.expect(TokenKind.Lsqbrac, "'[' (whole-register targets are not supported)")
        index = self.ts.expect(TokenKind.Int, "a register index")
        close = self.ts.expect(TokenKind.Rsqbrac)
        if index.value >= table[name.lexeme]:
            raise error("PAR105",
                        f"index {index.value} out of range for {name.lexeme!r} of size {table[name.lexeme]}",
                        index.span)
        return AstNode("RegRef", Span(name.span.start, close.span.end),
                       {"name": name.lexeme, "index": index.value})

    def body_target(self, qubit_names: list[str]) -> AstNode:
        name = self.ts.expect(TokenKind.Id, "a qubit argument name")
        if name.lexeme not in qubit_names:
            raise error("PAR104", f"{name.lexeme!r} is not a declared qubit argument", name.span)
        return _name(name)

    # Expression grammar: sum -> product -> unary -> power -> primary,
    # with '^' binding tightest and right-associative.
    def expression(self, scope: tuple[list[str], list[str]] | None) -> AstNode:
        node = self.product(scope)
        while self.ts.peek().kind in (TokenKind.Plus, TokenKind.Minus):
            op = self.ts.next()
            rhs = self.product(scope)
            kind = "Add" if op.kind is TokenKind.Plus else "Sub"
            node = AstNode(kind, Span(node.span.start, rhs.span.end), {}, [node, rhs])
        return node

    def product(self, scope) -> AstNode:
        node = self.unary(scope)
        while self.ts.peek().kind in (TokenKind.Times, TokenKind.Divide):
            op = self.ts.next()
            rhs = self.unary(scope)
            kind = "Mul" if op.kind is TokenKind.Times else "Div"
            node = AstNode(kind, Span(node.span.start, rhs.span.end), {}, [node, rhs])
        return node

    def unary(self, scope) -> AstNode:
        if self.ts.at(TokenKind.Minus):
            op = self.ts.next()
            operand = self.unary(scope)
            return _negate(operand, Span(op.span.start, operand.span.end))
        return self.power(scope)

    def power(self, scope) -> AstNode:
        base = self.primary(scope)
        if self.ts.accept(TokenKind.Power):
            exponent = self.unary(scope)
            return AstNode("Pow", Span(base.span.start, exponent.span.end), {}, [base, exponent])
        return base

    def primary(self, scope) -> AstNode:
        tok = self.ts.peek()
        if tok.kind is TokenKind.Int:
            self.ts.next()
            return AstNode("Int", tok.span, {"value": tok.value})
        if tok.kind is TokenKind.Real:
            self.ts.next()
            return AstNode("Real", tok.span, {"value": tok.value})
        if tok.kind is TokenKind.Pi:
            self.ts.next()
            return AstNode("Pi", tok.span)
        if tok.kind is TokenKind.Lbrac:
            self.ts.next()
            node = self.expression(scope)
            self.ts.expect(TokenKind.Rbrac)
            return node
        if tok.kind is TokenKind.Id:
            if scope is None or tok.lexeme not in scope[0]:
                raise error("PAR104", f"{tok.lexeme!r} is not a declared parameter", tok.span)
            self.ts.next()
            return AstNode("Name", tok.span, {"id": tok.lexeme})
        raise error("PAR101", f"expected an expression, found {describe(tok)}", tok.span)


def _wrap(kind: str, children: list[AstNode], fallback: Span) -> AstNode:
    span = Span(children[0].span.start, children[-1].span.end) if children else fallback
    return AstNode(kind, span, {}, children)


def _name(tok: Token) -> AstNode:
    return AstNode("Name", tok.span, {"id": tok.lexeme})


def _negate(operand: AstNode, span: Span) -> AstNode:
    # Unary minus over a numeric literal folds into a signed literal so that
    # print -> reparse is structurally stable.
    if operand.kind in ("Int", "Real") and not operand.children:
        return AstNode(operand.kind, span, {"value": -operand.attrs["value"]})
    return AstNode("Neg", span, {}, [operand])


def parse(tokens: list[Token]) -> AstNode:
    return Parser(tokens).parse_program()


def parse_string(source: str) -> AstNode:
    return parse(lex(source))

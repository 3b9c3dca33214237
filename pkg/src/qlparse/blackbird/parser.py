"""Recursive-descent parser for Blackbird producing the uniform AST.

Node kinds: Program, NameHeader, VersionHeader, Target, Option, Decl,
ArrayLiteral, Row, ModeStatement, plus expression kinds (Int, Real, Complex,
Bool, Str, Name, RegRef, Add, Sub, Mul, Div, Pow, Neg) and the wrappers
Args/Modes.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..ast import AstNode
from ..diagnostics import error
from ..position import Span
from ..tokens import Token, TokenStream, describe
from .lexer import TokenKind, lex

VARIABLE = "variable"


@dataclass(frozen=True)
class OperatorSignature:
    name: str
    arg_counts: frozenset[int]
    mode_count: int | str  # positive integer or VARIABLE
    preparation: bool = False


def _sig(name, counts, modes, prep=False):
    return OperatorSignature(name, frozenset(counts), modes, prep)


# The 17 operators and 7 state preparations. Names are fixed; arities follow
# the CV gate definitions (e.g. a beam splitter takes theta, phi and 2 modes).
OPERATORS = {
    sig.name: sig
    for sig in [
        _sig("Xgate", {1}, 1), _sig("Zgate", {1}, 1),
        _sig("Dgate", {1, 2}, 1), _sig("Sgate", {1, 2}, 1),
        _sig("Rgate", {1}, 1), _sig("Pgate", {1}, 1),
        _sig("Vgate", {1}, 1), _sig("Kgate", {1}, 1),
        _sig("Fouriergate", {0}, 1),
        _sig("CXgate", {1}, 2), _sig("CZgate", {1}, 2), _sig("CKgate", {1}, 2),
        _sig("BSgate", {2}, 2), _sig("S2gate", {1, 2}, 2),
        _sig("Interferometer", {1}, VARIABLE),
        _sig("GaussianTransform", {1}, VARIABLE),
        _sig("Gaussian", {1}, VARIABLE),
        _sig("Fock", {1}, 1, prep=True),
        _sig("Coherent", {1, 2}, 1, prep=True),
        _sig("Squeezed", {1, 2}, 1, prep=True),
        _sig("Vac", {0}, 1, prep=True),
        _sig("Thermal", {1}, 1, prep=True),
        _sig("DisplacedSqueezed", {2, 3, 4}, 1, prep=True),
        _sig("Catstate", {1, 2}, 1, prep=True),
    ]
}

DECL_TYPES = ("int", "float", "complex", "bool", "str", "array")
HEADERS = ("name", "version", "target")


class Parser:
    def __init__(self, tokens: list[Token]):
        self.ts = TokenStream(tokens, TokenKind.Eof, "PAR207")
        self.body_seen = False

    def parse_program(self) -> AstNode:
        first = self.ts.peek().span.start
        children = []
        while True:
            self._skip_blank_lines()
            if self.ts.at_end():
                break
            children.append(self.line())
        end = self.ts.peek().span.end
        return AstNode("Program", Span(first, end), {}, children)

    def _skip_blank_lines(self) -> None:
        while self.ts.accept(TokenKind.Newline):
            pass

    def _end_line(self) -> None:
        tok = self.ts.peek()
        if tok.kind not in (TokenKind.Newline, TokenKind.Eof):
            raise error("PAR207", f"unexpected {describe(tok)} at end of statement", tok.span)
        self.ts.accept(TokenKind.Newline)

    def line(self) -> AstNode:
        tok = self.ts.peek()
        if tok.kind is not TokenKind.Id:
            raise error("PAR207", f"expected a statement, found {describe(tok)}", tok.span)
        if tok.lexeme in HEADERS:
            if self.body_seen:
                raise error("PAR206", "header lines must precede all statements", tok.span)
            return self.header(tok.lexeme)
        self.body_seen = True
        if tok.lexeme in DECL_TYPES and self.ts.at(TokenKind.Id, ahead=1):
            return self.declaration()
        return self.mode_statement()

    def header(self, which: str) -> AstNode:
        kw = self.ts.next()
        if which == "name":
            value = self.ts.expect(TokenKind.Id, "a program name")
            self._end_line()
            return AstNode("NameHeader", Span(kw.span.start, value.span.end),
                           {"name": value.lexeme})
        if which == "version":
            tok = self.ts.peek()
            if tok.kind is TokenKind.Real and tok.lexeme.replace(".", "", 1).isdigit():
                major, minor = (int(part) for part in tok.lexeme.split("."))
            elif tok.kind is TokenKind.Int:
                major, minor = tok.value, 0
            else:
                raise error("PAR206", f"malformed version number {describe(tok)}", tok.span)
            self.ts.next()
            self._end_line()
            return AstNode("VersionHeader", Span(kw.span.start, tok.span.end),
                           {"major": major, "minor": minor})
        name = self.ts.expect(TokenKind.Id, "a target name")
        options = []
        end = name.span.end
        if self.ts.accept(TokenKind.Lbrac):
            if not self.ts.at(TokenKind.Rbrac):
                options.append(self.target_option())
                while self.ts.accept(TokenKind.Comma):
                    options.append(self.target_option())
            close = self.ts.peek()
            if not self.ts.accept(TokenKind.Rbrac):
                raise error("PAR201", "unbalanced parenthesis in target options", close.span)
            end = close.span.end
        self._end_line()
        return AstNode("Target", Span(kw.span.start, end), {"name": name.lexeme}, options)

    def target_option(self) -> AstNode:
        key = self.ts.expect(TokenKind.Id, "an option name")
        self.ts.expect(TokenKind.Assign)
        value = self.expression()
        return AstNode("Option", Span(key.span.start, value.span.end),
                       {"name": key.lexeme}, [value])

    def declaration(self) -> AstNode:
        decl_type = self.ts.next()
        name = self.ts.expect(TokenKind.Id, "a variable name")
        self.ts.expect(TokenKind.Assign)
        if decl_type.lexeme == "array":
            value = self.array_literal()
        else:
            value = self.expression()
        self._end_line()
        return AstNode("Decl", Span(decl_type.span.start, value.span.end),
                       {"decl_type": decl_type.lexeme, "name": name.lexeme}, [value])

    def array_literal(self) -> AstNode:
        open_ = self.ts.expect(TokenKind.Lsqbrac, "an array literal")
        rows = [self.array_row()]
        while self._accept_padded(TokenKind.Comma):
            rows.append(self.array_row())
        close = self._expect_bracket(TokenKind.Rsqbrac)
        width = len(rows[0].children)
        if any(len(row.children) != width for row in rows):
            raise error("PAR208", "array rows must all have the same length",
                        Span(open_.span.start, close.span.end))
        return AstNode("ArrayLiteral", Span(open_.span.start, close.span.end), {}, rows)

    def array_row(self) -> AstNode:
        self._skip_blank_lines()
        open_ = self.ts.expect(TokenKind.Lsqbrac, "an array row")
        elements = [self.expression()]
        while self._accept_padded(TokenKind.Comma):
            elements.append(self.expression())
        close = self._expect_bracket(TokenKind.Rsqbrac)
        return AstNode("Row", Span(open_.span.start, close.span.end), {}, elements)

    def _accept_padded(self, kind: TokenKind) -> Token | None:
        tok = self.ts.accept(kind)
        if tok:
            self._skip_blank_lines()
        return tok

    def _expect_bracket(self, kind: TokenKind) -> Token:
        self._skip_blank_lines()
        tok = self.ts.peek()
        if not self.ts.accept(kind):
            raise error("PAR201", f"unbalanced bracket: expected ']', found {describe(tok)}",
                        tok.span)
        return tok

    def mode_statement(self) -> AstNode:
        head = self.ts.next()
        sig = OPERATORS.get(head.lexeme)
        if sig is None:
            raise error("PAR203", f"unknown operator or preparation {head.lexeme!r}", head.span)
        args: list[AstNode] = []
        if self.ts.accept(TokenKind.Lbrac):
            if not self.ts.at(TokenKind.Rbrac):
                args.append(self.expression())
                while self.ts.accept(TokenKind.Comma):
                    args.append(self.expression())
            close = self.ts.peek()
            if not self.ts.accept(TokenKind.Rbrac):
                raise error("PAR201", "unbalanced parenthesis in argument list", close.span)
        self.ts.expect(TokenKind.Pipe, "'|'")
        modes = self.mode_list()
        self._end_line()
        if len(args) not in sig.arg_counts:
            counts = " or ".join(str(c) for c in sorted(sig.arg_counts))
            raise error("PAR204",
                        f"{sig.name} takes {counts} argument(s), got {len(args)}", head.span)
        if sig.mode_count is VARIABLE:
            if not modes:
                raise error("PAR205", f"{sig.name} needs at least one mode", head.span)
        elif len(modes) != sig.mode_count:
            raise error("PAR205",
                        f"{sig.name} acts on {sig.mode_count} mode(s), got {len(modes)}",
                        head.span)
        values = [m.attrs["value"] for m in modes]
        if len(set(values)) != len(values):
            raise error("PAR205", "modes within one statement must be distinct", head.span)
        span = Span(head.span.start, modes[-1].span.end if modes else head.span.end)
        children = [
            AstNode("Args", span, {}, args),
            AstNode("Modes", span, {}, modes),
        ]
        return AstNode("ModeStatement", span, {"name": head.lexeme}, children)

    def mode_list(self) -> list[AstNode]:
        if self.ts.accept(TokenKind.Lbrac):
            modes = [self.mode()]
            while self.ts.accept(TokenKind.Comma):
                modes.append(self.mode())
            close = self.ts.peek()
            if not self.ts.accept(TokenKind.Rbrac):
                raise error("PAR201", "unbalanced parenthesis in mode list", close.span)
            return modes
        return [self.mode()]

    def mode(self) -> AstNode:
        tok = self.ts.expect(TokenKind.Int, "a mode number")
        return AstNode("Int", tok.span, {"value": tok.value})

    # Expression grammar: +/- < */ < unary - < ** (right-associative).
    def expression(self) -> AstNode:
        node = self.product()
        while self.ts.peek().kind in (TokenKind.Plus, TokenKind.Minus):
            op = self.ts.next()
            rhs = self.product()
            kind = "Add" if op.kind is TokenKind.Plus else "Sub"
            node = AstNode(kind, Span(node.span.start, rhs.span.end), {}, [node, rhs])
        return node

    def product(self) -> AstNode:
        node = self.unary()
        while self.ts.peek().kind in (TokenKind.Times, TokenKind.Divide):
            op = self.ts.next()
            rhs = self.unary()
            kind = "Mul" if op.kind is TokenKind.Times else "Div"
            node = AstNode(kind, Span(node.span.start, rhs.span.end), {}, [node, rhs])
        return node

    def unary(self) -> AstNode:
        if self.ts.at(TokenKind.Minus):
            op = self.ts.next()
            operand = self.unary()
            if operand.kind in ("Int", "Real") and not operand.children:
                return AstNode(operand.kind, Span(op.span.start, operand.span.end),
                               {"value": -operand.attrs["value"]})
            return AstNode("Neg", Span(op.span.start, operand.span.end), {}, [operand])
        return self.power()

    def power(self) -> AstNode:
        base = self.primary()
        if self.ts.accept(TokenKind.Power):
            exponent = self.unary()
            return AstNode("Pow", Span(base.span.start, exponent.span.end), {}, [base, exponent])
        return base

    def primary(self) -> AstNode:
        tok = self.ts.peek()
        if tok.kind is TokenKind.Int:
            self.ts.next()
            return AstNode("Int", tok.span, {"value": tok.value})
        if tok.kind is TokenKind.Real:
            self.ts.next()
            return AstNode("Real", tok.span, {"value": tok.value})
        if tok.kind is TokenKind.Complex:
            self.ts.next()
            return AstNode("Complex", tok.span, {"imag": tok.value})
        if tok.kind is TokenKind.Bool:
            self.ts.next()
            return AstNode("Bool", tok.span, {"value": tok.value})
        if tok.kind is TokenKind.Str:
            self.ts.next()
            return AstNode("Str", tok.span, {"value": tok.value})
        if tok.kind is TokenKind.Id:
            self.ts.next()
            if self.ts.accept(TokenKind.Lsqbrac):
                index = self.ts.expect(TokenKind.Int, "a mode index")
                close = self.ts.peek()
                if not self.ts.accept(TokenKind.Rsqbrac):
                    raise error("PAR201", "unbalanced bracket in mode reference", close.span)
                return AstNode("RegRef", Span(tok.span.start, close.span.end),
                               {"name": tok.lexeme, "index": index.value})
            return AstNode("Name", tok.span, {"id": tok.lexeme})
        if tok.kind is TokenKind.Lbrac:
            self.ts.next()
            node = self.expression()
            close = self.ts.peek()
            if not self.ts.accept(TokenKind.Rbrac):
                raise error("PAR201", "unbalanced parenthesis in expression", close.span)
            return node
        raise error("PAR202", f"expected an operand, found {describe(tok)}", tok.span)


def parse(tokens: list[Token]) -> AstNode:
    return Parser(tokens).parse_program()


def parse_string(source: str) -> AstNode:
    return parse(lex(source))


def parse_expression(tokens: list[Token]) -> AstNode:
    """Parse a single expression from a token stream (remaining tokens are left)."""
    return Parser(tokens).expression()

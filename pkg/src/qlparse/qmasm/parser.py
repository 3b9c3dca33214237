"""Recursive-descent parser for QMASM producing the uniform AST.

Node kinds: Program, Weight, Coupling, Chain, AntiChain, Equiv, Pin,
MacroDef, UseMacro, Include, Assert, For, If, Then, Else, Let, Range, plus
expression kinds (Int, Real, Bool, Name, Add, Sub, Mul, Div, Mod, Pow, Neg,
Eq, Ne, Lt, Gt, Le, Ge, And, Or).

Line shapes: two fields make a Weight, three a Coupling; relation lines are
classified by their operator and directive lines by their leading keyword.
"""

from __future__ import annotations

from ..ast import AstNode
from ..diagnostics import error
from ..position import Span
from ..tokens import Token, TokenStream, describe
from .lexer import TokenKind, lex

_CMP = {
    TokenKind.Equal: "Eq",
    TokenKind.NotEqual: "Ne",
    TokenKind.Lt: "Lt",
    TokenKind.Gt: "Gt",
    TokenKind.Le: "Le",
    TokenKind.Ge: "Ge",
}

_RELATIONS = {
    TokenKind.Equal: "Chain",
    TokenKind.NotEqual: "AntiChain",
    TokenKind.Equiv: "Equiv",
}


class Parser:
    def __init__(self, tokens: list[Token]):
        self.ts = TokenStream(tokens, TokenKind.Eof, "PAR302")
        self.macro_depth = 0

    def parse_program(self) -> AstNode:
        first = self.ts.peek().span.start
        statements = self.statements(stop=())
        end = self.ts.peek().span.end
        return AstNode("Program", Span(first, end), {}, statements)

    def statements(self, stop: tuple[TokenKind, ...]) -> list[AstNode]:
        out = []
        while True:
            while self.ts.accept(TokenKind.Newline):
                pass
            tok = self.ts.peek()
            if tok.kind is TokenKind.Eof or tok.kind in stop:
                return out
            out.append(self.statement())

    def _end_line(self) -> None:
        tok = self.ts.peek()
        if tok.kind not in (TokenKind.Newline, TokenKind.Eof):
            raise error("PAR302", f"unexpected {describe(tok)} at end of statement", tok.span)
        self.ts.accept(TokenKind.Newline)

    def statement(self) -> AstNode:
        tok = self.ts.peek()
        kind = tok.kind
        if kind is TokenKind.BeginMacro:
            return self.macro_def()
        if kind is TokenKind.UseMacro:
            return self.use_macro()
        if kind is TokenKind.Include:
            return self.include()
        if kind is TokenKind.Assert:
            return self.assertion()
        if kind is TokenKind.For:
            return self.for_loop()
        if kind is TokenKind.If:
            return self.if_else()
        if kind is TokenKind.Let:
            return self.let_binding()
        if kind in (TokenKind.EndMacro, TokenKind.EndFor, TokenKind.EndIf, TokenKind.Else):
            raise error("PAR302", f"{tok.lexeme} without a matching opener", tok.span)
        if kind is TokenKind.Next:
            raise error("PAR302", "bare !next is not a statement; write !next.<symbol>", tok.span)
        if kind is TokenKind.Id:
            return self.field_line()
        raise error("PAR302", f"expected a statement, found {describe(tok)}", tok.span)

    def symbol(self) -> Token:
        tok = self.ts.expect(TokenKind.Id, "a symbol")
        if tok.lexeme.startswith("!next.") and self.macro_depth == 0:
            raise error("PAR303", "!next.-prefixed symbols are only valid inside a macro body",
                        tok.span)
        return tok

    def field_line(self) -> AstNode:
        first = self.symbol()
        tok = self.ts.peek()
        if tok.kind in _RELATIONS:
            op = self.ts.next()
            second = self.symbol()
            self._end_line()
            return AstNode(_RELATIONS[op.kind], Span(first.span.start, second.span.end),
                           {"symbol1": first.lexeme, "symbol2": second.lexeme})
        if tok.kind is TokenKind.Assign:
            self.ts.next()
            value = self.expression()
            self._end_line()
            return AstNode("Pin", Span(first.span.start, value.span.end),
                           {"symbol": first.lexeme}, [value])
        if tok.kind is TokenKind.Id:
            second = self.symbol()
            value = self.expression()
            self._end_line()
            return AstNode("Coupling", Span(first.span.start, value.span.end),
                           {"symbol1": first.lexeme, "symbol2": second.lexeme}, [value])
        value = self.expression()
        self._end_line()
        return AstNode("Weight", Span(first.span.start, value.span.end),
                       {"symbol": first.lexeme}, [value])

    def macro_def(self) -> AstNode:
        kw = self.ts.next()
        if self.macro_depth > 0:
            raise error("PAR305", "macro definitions do not nest", kw.span)
        name = self.ts.expect(TokenKind.Id, "a macro name")
        self._end_line()
        self.macro_depth += 1
        try:
            body = self.statements(stop=(TokenKind.EndMacro,))
        finally:
            self.macro_depth -= 1
        closer = self.ts.peek()
        if closer.kind is not TokenKind.EndMacro:
            raise error("PAR301", f"macro {name.lexeme!r} is never closed", kw.span)
        self.ts.next()
        end_name = self.ts.expect(TokenKind.Id, "the macro name")
        if end_name.lexeme != name.lexeme:
            raise error("PAR301",
                        f"macro {name.lexeme!r} closed as {end_name.lexeme!r}", end_name.span)
        self._end_line()
        return AstNode("MacroDef", Span(kw.span.start, end_name.span.end),
                       {"name": name.lexeme}, body)

    def use_macro(self) -> AstNode:
        kw = self.ts.next()
        name = self.ts.expect(TokenKind.Id, "a macro name")
        instances = []
        end = name.span.end
        while self.ts.at(TokenKind.Id):
            inst = self.symbol()
            instances.append(AstNode("Name", inst.span, {"id": inst.lexeme}))
            end = inst.span.end
        self._end_line()
        return AstNode("UseMacro", Span(kw.span.start, end), {"name": name.lexeme}, instances)

    def include(self) -> AstNode:
        kw = self.ts.next()
        tok = self.ts.peek()
        if tok.kind is TokenKind.Str:
            self.ts.next()
            path = tok.value
        elif tok.kind is TokenKind.Id:
            self.ts.next()
            path = tok.lexeme
        else:
            raise error("PAR302", f"expected an include path, found {describe(tok)}", tok.span)
        self._end_line()
        return AstNode("Include", Span(kw.span.start, tok.span.end), {"path": path})

    def assertion(self) -> AstNode:
        kw = self.ts.next()
        expr = self.expression()
        self._end_line()
        return AstNode("Assert", Span(kw.span.start, expr.span.end), {}, [expr])

    def for_loop(self) -> AstNode:
        kw = self.ts.next()
        var = self.ts.expect(TokenKind.Id, "a loop variable")
        self.ts.expect(TokenKind.Assign, "':='")
        lo = self.expression()
        range_children = [lo]
        end = lo.span.end
        if self.ts.accept(TokenKind.DotDot):
            hi = self.expression()
            range_children.append(hi)
            end = hi.span.end
            step = self.ts.peek()
            if step.kind is TokenKind.Id and step.lexeme == "step":
                self.ts.next()
                step_expr = self.expression()
                range_children.append(step_expr)
                end = step_expr.span.end
        tok = self.ts.peek()
        if tok.kind not in (TokenKind.Newline, TokenKind.Eof):
            raise error("PAR304", f"malformed range: unexpected {describe(tok)}", tok.span)
        self.ts.accept(TokenKind.Newline)
        body = self.statements(stop=(TokenKind.EndFor,))
        closer = self.ts.peek()
        if closer.kind is not TokenKind.EndFor:
            raise error("PAR306", "!for is never closed with !end_for", kw.span)
        close = self.ts.next()
        self._end_line()
        range_node = AstNode("Range", Span(lo.span.start, end), {}, range_children)
        return AstNode("For", Span(kw.span.start, close.span.end),
                       {"var": var.lexeme}, [range_node, *body])

    def if_else(self) -> AstNode:
        kw = self.ts.next()
        cond = self.expression()
        self._end_line()
        then_body = self.statements(stop=(TokenKind.Else, TokenKind.EndIf))
        children = [cond]
        tok = self.ts.peek()
        then_node = AstNode("Then", kw.span if not then_body else
                            Span(then_body[0].span.start, then_body[-1].span.end), {}, then_body)
        children.append(then_node)
        if tok.kind is TokenKind.Else:
            self.ts.next()
            self._end_line()
            else_body = self.statements(stop=(TokenKind.EndIf,))
            else_node = AstNode("Else", kw.span if not else_body else
                                Span(else_body[0].span.start, else_body[-1].span.end), {}, else_body)
            children.append(else_node)
        closer = self.ts.peek()
        if closer.kind is not TokenKind.EndIf:
            raise error("PAR306", "!if is never closed with !end_if", kw.span)
        close = self.ts.next()
        self._end_line()
        return AstNode("If", Span(kw.span.start, close.span.end), {}, children)

    def let_binding(self) -> AstNode:
        kw = self.ts.next()
        var = self.ts.expect(TokenKind.Id, "a variable name")
        self.ts.expect(TokenKind.Assign, "':='")
        value = self.expression()
        end = value.span.end
        if self.ts.accept(TokenKind.DotDot):
            hi = self.expression()
            value = AstNode("Range", Span(value.span.start, hi.span.end), {}, [value, hi])
            end = hi.span.end
        self._end_line()
        return AstNode("Let", Span(kw.span.start, end), {"var": var.lexeme}, [value])

    # Expression grammar, loosest to tightest:
    # or < and < comparison (non-associative) < +/- < */ /% < unary - < **.
    def expression(self) -> AstNode:
        node = self.and_expr()
        while self.ts.at(TokenKind.OrOr):
            self.ts.next()
            rhs = self.and_expr()
            node = AstNode("Or", Span(node.span.start, rhs.span.end), {}, [node, rhs])
        return node

    def and_expr(self) -> AstNode:
        node = self.comparison()
        while self.ts.at(TokenKind.AndAnd):
            self.ts.next()
            rhs = self.comparison()
            node = AstNode("And", Span(node.span.start, rhs.span.end), {}, [node, rhs])
        return node

    def comparison(self) -> AstNode:
        node = self.arith()
        if self.ts.peek().kind in _CMP:
            op = self.ts.next()
            rhs = self.arith()
            node = AstNode(_CMP[op.kind], Span(node.span.start, rhs.span.end), {}, [node, rhs])
        return node

    def arith(self) -> AstNode:
        node = self.term()
        while self.ts.peek().kind in (TokenKind.Plus, TokenKind.Minus):
            op = self.ts.next()
            rhs = self.term()
            kind = "Add" if op.kind is TokenKind.Plus else "Sub"
            node = AstNode(kind, Span(node.span.start, rhs.span.end), {}, [node, rhs])
        return node

    def term(self) -> AstNode:
        node = self.unary()
        while self.ts.peek().kind in (TokenKind.Times, TokenKind.Divide, TokenKind.Percent):
            op = self.ts.next()
            rhs = self.unary()
            kind = {TokenKind.Times: "Mul", TokenKind.Divide: "Div",
                    TokenKind.Percent: "Mod"}[op.kind]
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
        if tok.kind is TokenKind.Bool:
            self.ts.next()
            return AstNode("Bool", tok.span, {"value": tok.value})
        if tok.kind is TokenKind.Id:
            self.ts.next()
            return AstNode("Name", tok.span, {"id": tok.lexeme})
        if tok.kind is TokenKind.Lbrac:
            self.ts.next()
            node = self.expression()
            self.ts.expect(TokenKind.Rbrac, "')'")
            return node
        raise error("PAR302", f"expected an expression, found {describe(tok)}", tok.span)


def parse(tokens: list[Token]) -> AstNode:
    return Parser(tokens).parse_program()


def parse_string(source: str) -> AstNode:
    return parse(lex(source))

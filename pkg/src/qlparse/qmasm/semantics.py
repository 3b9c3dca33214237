"""Static semantics for parsed QMASM.

Pipeline: resolve_includes -> expand_macros -> elaborate -> flatten_to_ising,
with check_assertions on the elaborated statements. Each stage consumes and
produces uniform AST nodes; elaborate leaves only Weight/Coupling/Chain/
AntiChain/Equiv/Pin statements with literal values, plus closed Asserts.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable

from ..ast import AstNode
from ..diagnostics import error
from ..position import Span
from .ising import IsingModel, sem_error
from .parser import parse_string


@dataclass(frozen=True)
class Range:
    lo: int
    hi: int
    step: int = 1

    def __post_init__(self):
        if self.step == 0:
            raise sem_error("SEM314", "range step must not be zero")

    def values(self) -> list[int]:
        stop = self.hi + (1 if self.step > 0 else -1)
        return list(range(self.lo, stop, self.step))


@dataclass
class Iterator:
    """Position over a Range; the runtime value driving a loop."""

    range: Range
    index: int = 0

    def done(self) -> bool:
        return self.index >= len(self.range.values())

    def value(self) -> int:
        return self.range.values()[self.index]


ClassicalValue = int | float | bool | Range


@dataclass(frozen=True)
class QuantumSymbol:
    """A classified quantum symbol. Dotted prefixes carry macro-instance scope
    (e.g. "inst.a"); a [n] suffix names one element of a qubit array."""

    role: str  # "Qubit", "Ancilliary", "QubitArray", or "Register"
    name: str
    index: int | None = None

    ROLES = ("Qubit", "Ancilliary", "QubitArray", "Register")

    def __post_init__(self):
        if not self.name:
            raise ValueError("quantum symbols have non-empty names")
        if self.role not in self.ROLES:
            raise ValueError(f"unknown role {self.role!r}")

    @property
    def scope(self) -> tuple[str, ...]:
        return tuple(self.name.split(".")[:-1])

    @classmethod
    def from_text(cls, text: str) -> "QuantumSymbol":
        """Classify a symbol as it appears in statements: `base[n]` is one
        element of a QubitArray, a `_`-prefixed final segment is an ancilla
        (assembler convention for internal helper qubits), anything else is a
        plain Qubit. Register is reserved for whole-array references and is
        never inferred from statement text."""
        index = None
        name = text
        m = re.fullmatch(r"(.*)\[(\d+)\]", text)
        if m:
            name, index = m.group(1), int(m.group(2))
            return cls("QubitArray", name, index)
        if name.split(".")[-1].startswith("_"):
            return cls("Ancilliary", name)
        return cls("Qubit", name)


@dataclass
class MacroEnvironment:
    macros: dict[str, AstNode] = field(default_factory=dict)
    bindings: dict[str, ClassicalValue] = field(default_factory=dict)
    include_depth: int = 0


MAX_INCLUDE_DEPTH = 16

Loader = Callable[[str], str | None]


def resolve_includes(program: AstNode, loader: Loader, _depth: int = 0) -> AstNode:
    """Replace every Include statement by the parsed included file's
    statements, depth-first. The loader maps a path to source text or None."""
    if _depth > MAX_INCLUDE_DEPTH:
        raise sem_error("SEM302", f"include depth exceeds {MAX_INCLUDE_DEPTH} (cycle?)")

    def walk(statements: list[AstNode]) -> list[AstNode]:
        out: list[AstNode] = []
        for node in statements:
            if node.kind == "Include":
                path = str(node.attrs["path"])
                text = loader(path)
                if text is None:
                    raise error("SEM301", f"cannot resolve include {path!r}", node.span)
                included = parse_string(text)
                resolved = resolve_includes(included, loader, _depth + 1)
                out.extend(resolved.children)
            elif node.kind in ("MacroDef", "For"):
                rebuilt = node.with_attrs()
                rebuilt.children = (node.children[:1] + walk(node.children[1:])
                                    if node.kind == "For" else walk(node.children))
                out.append(rebuilt)
            elif node.kind == "If":
                rebuilt = node.with_attrs()
                rebuilt.children = [node.children[0]] + [
                    AstNode(b.kind, b.span, dict(b.attrs), walk(b.children))
                    for b in node.children[1:]
                ]
                out.append(rebuilt)
            else:
                out.append(node)
        return out

    return AstNode(program.kind, program.span, dict(program.attrs), walk(program.children))


class _DanglingNext(Exception):
    """A !next.-prefixed symbol in the final instance of a chain."""


def expand_macros(program: AstNode) -> list[AstNode]:
    """Instantiate every UseMacro: with instances [i1..ik], the body is copied
    k times; in copy m every symbol s becomes "im.s", except !next.s which
    becomes "i(m+1).s". In the final copy of a chain of two or more instances,
    statements still referencing !next are dropped (they have no successor to
    couple to); with a single instance the dangling reference is SEM303.
    MacroDef statements are removed from the output."""
    macros: dict[str, AstNode] = {}

    def prefix_symbol(sym: str, prefix: str, next_prefix: str | None, span: Span,
                      drop_dangling: bool) -> str:
        if sym.startswith("!next."):
            if next_prefix is None:
                if drop_dangling:
                    raise _DanglingNext()
                raise error("SEM303", "dangling !next: the macro chain has no next instance",
                            span)
            return next_prefix + sym[len("!next."):]
        return prefix + sym

    def walk(statements: list[AstNode], prefix: str, next_prefix: str | None,
             top_level: bool, drop_dangling: bool) -> list[AstNode]:
        out: list[AstNode] = []
        for node in statements:
            kind = node.kind
            if kind == "MacroDef":
                name = str(node.attrs["name"])
                if not top_level:
                    raise error("PAR305", "macro definitions must be top-level", node.span)
                if name in macros:
                    raise error("SEM316", f"macro {name!r} is already defined", node.span)
                macros[name] = node
            elif kind == "UseMacro":
                name = str(node.attrs["name"])
                macro = macros.get(name)
                if macro is None:
                    raise error("SEM304", f"unknown macro {name!r}", node.span)
                try:
                    instances = [
                        prefix_symbol(str(c.attrs["id"]), prefix, next_prefix, c.span,
                                      drop_dangling)
                        for c in node.children
                    ]
                except _DanglingNext:
                    continue
                for m, instance in enumerate(instances):
                    nxt = instances[m + 1] + "." if m + 1 < len(instances) else None
                    out.extend(walk(macro.children, instance + ".", nxt, top_level=False,
                                    drop_dangling=(len(instances) >= 2 and nxt is None)))
            elif kind in ("Weight", "Pin"):
                try:
                    out.append(node.with_attrs(
                        symbol=prefix_symbol(str(node.attrs["symbol"]), prefix, next_prefix,
                                             node.span, drop_dangling)))
                except _DanglingNext:
                    continue
            elif kind in ("Coupling", "Chain", "AntiChain", "Equiv"):
                try:
                    out.append(node.with_attrs(
                        symbol1=prefix_symbol(str(node.attrs["symbol1"]), prefix, next_prefix,
                                              node.span, drop_dangling),
                        symbol2=prefix_symbol(str(node.attrs["symbol2"]), prefix, next_prefix,
                                              node.span, drop_dangling)))
                except _DanglingNext:
                    continue
            elif kind == "For":
                rebuilt = node.with_attrs()
                rebuilt.children = node.children[:1] + walk(node.children[1:], prefix,
                                                            next_prefix, top_level=False,
                                                            drop_dangling=drop_dangling)
                out.append(rebuilt)
            elif kind == "If":
                rebuilt = node.with_attrs()
                rebuilt.children = [node.children[0]] + [
                    AstNode(b.kind, b.span, dict(b.attrs),
                            walk(b.children, prefix, next_prefix, top_level=False,
                                 drop_dangling=drop_dangling))
                    for b in node.children[1:]
                ]
                out.append(rebuilt)
            elif kind == "Include":
                raise error("SEM301", "includes must be resolved before macro expansion",
                            node.span)
            else:  # Assert, Let: no quantum symbols to prefix
                out.append(node)
        return out

    return walk(program.children, "", None, top_level=True, drop_dangling=False)


_INTERP = re.compile(r"\$([A-Za-z_][A-Za-z0-9_]*)")


def _format_value(value: ClassicalValue, span: Span) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return repr(value)
    raise error("SEM306", f"cannot interpolate a {type(value).__name__} into a symbol", span)


def interpolate(symbol: str, bindings: dict[str, ClassicalValue], span: Span) -> str:
    def sub(match: re.Match[str]) -> str:
        name = match.group(1)
        if name not in bindings:
            raise error("SEM305", f"unbound variable ${name}", span)
        return _format_value(bindings[name], span)

    return _INTERP.sub(sub, symbol)


def eval_expr(node: AstNode, bindings: dict[str, ClassicalValue]) -> ClassicalValue:
    kind = node.kind
    if kind in ("Int", "Real", "Bool"):
        return node.attrs["value"]
    if kind == "Name":
        name = str(node.attrs["id"])
        if name not in bindings:
            raise error("SEM305", f"unbound variable {name!r}", node.span)
        return bindings[name]
    if kind == "Neg":
        return -_number(eval_expr(node.children[0], bindings), node)
    if kind in ("And", "Or"):
        left = _boolean(eval_expr(node.children[0], bindings), node)
        right = _boolean(eval_expr(node.children[1], bindings), node)
        return (left and right) if kind == "And" else (left or right)
    if kind in ("Eq", "Ne"):
        left = eval_expr(node.children[0], bindings)
        right = eval_expr(node.children[1], bindings)
        result = left == right
        return result if kind == "Eq" else not result
    if kind in ("Lt", "Gt", "Le", "Ge"):
        left = _number(eval_expr(node.children[0], bindings), node)
        right = _number(eval_expr(node.children[1], bindings), node)
        return {"Lt": left < right, "Gt": left > right,
                "Le": left <= right, "Ge": left >= right}[kind]
    if kind in ("Add", "Sub", "Mul", "Div", "Mod", "Pow"):
        left = _number(eval_expr(node.children[0], bindings), node)
        right = _number(eval_expr(node.children[1], bindings), node)
        if kind == "Add":
            return left + right
        if kind == "Sub":
            return left - right
        if kind == "Mul":
            return left * right
        if kind == "Pow":
            return left ** right
        if right == 0:
            raise error("SEM307", "division by zero", node.span)
        return left / right if kind == "Div" else left % right
    raise error("SEM306", f"cannot evaluate a {kind} node", node.span)


def _number(value: ClassicalValue, node: AstNode) -> int | float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise error("SEM306", f"expected a number, got {type(value).__name__}", node.span)
    return value


def _boolean(value: ClassicalValue, node: AstNode) -> bool:
    if not isinstance(value, bool):
        raise error("SEM306", f"expected a boolean, got {type(value).__name__}", node.span)
    return value


def _literal(value: int | float, span: Span) -> AstNode:
    if isinstance(value, int):
        return AstNode("Int", span, {"value": value})
    return AstNode("Real", span, {"value": value})


def _close_expr(node: AstNode, bindings: dict[str, ClassicalValue]) -> AstNode:
    """Replace variable references with their bound literal values, leaving the
    expression structure intact (assertions stay evaluable after elaboration)."""
    if node.kind == "Name":
        name = str(node.attrs["id"])
        if name not in bindings:
            raise error("SEM305", f"unbound variable {name!r}", node.span)
        value = bindings[name]
        if isinstance(value, bool):
            return AstNode("Bool", node.span, {"value": value})
        if isinstance(value, (int, float)):
            return _literal(value, node.span)
        raise error("SEM306", "assertions may only reference int/float/bool bindings",
                    node.span)
    rebuilt = AstNode(node.kind, node.span, dict(node.attrs),
                      [_close_expr(c, bindings) for c in node.children])
    return rebuilt


def _range_value(node: AstNode, bindings: dict[str, ClassicalValue]) -> Range:
    if node.kind == "Range" and len(node.children) >= 2:
        parts = [eval_expr(c, bindings) for c in node.children]
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int):
                raise error("SEM314", "range bounds must be integers", node.span)
        return Range(*parts)
    value = eval_expr(node.children[0] if node.kind == "Range" else node, bindings)
    if not isinstance(value, Range):
        raise error("SEM314", "loop source must be a range", node.span)
    return value


def elaborate(statements: list[AstNode],
              env: MacroEnvironment | None = None) -> list[AstNode]:
    """Run loops and conditionals, evaluate Let bindings, substitute $var
    interpolations, and reduce Weight/Coupling/Pin values to literals."""
    env = env or MacroEnvironment()
    return _elaborate(statements, env.bindings)


def _coefficient(node: AstNode, bindings: dict[str, ClassicalValue]) -> int | float:
    value = eval_expr(node, bindings)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise error("SEM315", "weights and couplings must be numeric", node.span)
    if not math.isfinite(value):
        raise error("SEM315", "weights and couplings must be finite", node.span)
    return value


def _pin_value(node: AstNode, bindings: dict[str, ClassicalValue]) -> bool:
    value = eval_expr(node, bindings)
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        if value in (0, -1):
            return False
        if value == 1:
            return True
    raise error("SEM306", "pins take a boolean (or +1/0/-1) value", node.span)


def _elaborate(statements: list[AstNode], bindings: dict[str, ClassicalValue]) -> list[AstNode]:
    out: list[AstNode] = []
    for node in statements:
        kind = node.kind
        if kind == "Let":
            value_node = node.children[0]
            if value_node.kind == "Range":
                bindings[str(node.attrs["var"])] = _range_value(value_node, bindings)
            else:
                bindings[str(node.attrs["var"])] = eval_expr(value_node, bindings)
        elif kind == "For":
            rng = _range_value(node.children[0], bindings)
            var = str(node.attrs["var"])
            walker = Iterator(rng)
            while not walker.done():
                scope = dict(bindings)
                scope[var] = walker.value()
                out.extend(_elaborate(node.children[1:], scope))
                walker.index += 1
        elif kind == "If":
            condition = _boolean(eval_expr(node.children[0], bindings), node.children[0])
            branch = node.children[1] if condition else (
                node.children[2] if len(node.children) > 2 else None)
            if branch is not None:
                out.extend(_elaborate(branch.children, dict(bindings)))
        elif kind == "Weight":
            symbol = interpolate(str(node.attrs["symbol"]), bindings, node.span)
            value = _coefficient(node.children[0], bindings)
            out.append(AstNode("Weight", node.span, {"symbol": symbol},
                               [_literal(value, node.children[0].span)]))
        elif kind == "Coupling":
            sym1 = interpolate(str(node.attrs["symbol1"]), bindings, node.span)
            sym2 = interpolate(str(node.attrs["symbol2"]), bindings, node.span)
            value = _coefficient(node.children[0], bindings)
            out.append(AstNode("Coupling", node.span, {"symbol1": sym1, "symbol2": sym2},
                               [_literal(value, node.children[0].span)]))
        elif kind == "Pin":
            symbol = interpolate(str(node.attrs["symbol"]), bindings, node.span)
            value = _pin_value(node.children[0], bindings)
            out.append(AstNode("Pin", node.span, {"symbol": symbol},
                               [AstNode("Bool", node.children[0].span, {"value": value})]))
        elif kind in ("Chain", "AntiChain", "Equiv"):
            out.append(node.with_attrs(
                symbol1=interpolate(str(node.attrs["symbol1"]), bindings, node.span),
                symbol2=interpolate(str(node.attrs["symbol2"]), bindings, node.span)))
        elif kind == "Assert":
            closed = _close_expr(node.children[0], bindings)
            _boolean(eval_expr(closed, {}), closed)  # eager type/zero-division check
            out.append(AstNode("Assert", node.span, {}, [closed]))
        elif kind == "Include":
            raise error("SEM301", "includes must be resolved before elaboration", node.span)
        else:
            raise error("SEM306", f"unexpected {kind} statement during elaboration", node.span)
    return out


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, sym: str) -> str:
        self.parent.setdefault(sym, sym)
        root = sym
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[sym] != root:
            self.parent[sym], sym = root, self.parent[sym]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # canonical representative: lexicographically least member
            lo, hi = sorted((ra, rb))
            self.parent[hi] = lo


def flatten_to_ising(statements: list[AstNode]) -> IsingModel:
    """Accumulate weights/couplings additively, record relations and pins as
    hard constraints, and alias equivalent symbols (canonical representative =
    lexicographically least member)."""
    model = IsingModel()
    aliases = _UnionFind()
    for node in statements:
        if node.kind == "Equiv":
            aliases.union(str(node.attrs["symbol1"]), str(node.attrs["symbol2"]))
            model.equivalences.add(_sorted_pair(node))

    for node in statements:
        kind = node.kind
        if kind == "Weight":
            sym = aliases.find(str(node.attrs["symbol"]))
            model.h[sym] = model.h.get(sym, 0.0) + float(node.children[0].attrs["value"])
        elif kind == "Coupling":
            a = aliases.find(str(node.attrs["symbol1"]))
            b = aliases.find(str(node.attrs["symbol2"]))
            if a == b:
                raise error("SEM308", f"self-coupling on {a!r}", node.span)
            key = (a, b) if a <= b else (b, a)
            model.J[key] = model.J.get(key, 0.0) + float(node.children[0].attrs["value"])
        elif kind == "Chain":
            a = aliases.find(str(node.attrs["symbol1"]))
            b = aliases.find(str(node.attrs["symbol2"]))
            if a != b:  # a chain between aliased symbols is trivially satisfied
                model.chains.add((a, b) if a <= b else (b, a))
        elif kind == "AntiChain":
            a = aliases.find(str(node.attrs["symbol1"]))
            b = aliases.find(str(node.attrs["symbol2"]))
            if a == b:
                raise error("SEM309", f"anti-chain on aliased symbol {a!r}", node.span)
            model.antichains.add((a, b) if a <= b else (b, a))
        elif kind == "Pin":
            sym = aliases.find(str(node.attrs["symbol"]))
            goal = bool(node.children[0].attrs["value"])
            if sym in model.pins and model.pins[sym] != goal:
                raise error("SEM309", f"contradictory pins on {sym!r}", node.span)
            model.pins[sym] = goal
        elif kind in ("Equiv", "Assert"):
            pass
        else:
            raise error("SEM306", f"unexpected {kind} statement during flattening", node.span)
    return model


def _sorted_pair(node: AstNode) -> tuple[str, str]:
    a, b = str(node.attrs["symbol1"]), str(node.attrs["symbol2"])
    return (a, b) if a <= b else (b, a)


def check_assertions(statements: list[AstNode], model: IsingModel | None = None,
                     result: object = None) -> list[tuple[AstNode, bool]]:
    """Evaluate each Assert's closed expression to a verdict. Assertions are
    classical-only; `model` and `result` are accepted for interface stability
    but unused."""
    verdicts = []
    for node in statements:
        if node.kind != "Assert":
            continue
        value = eval_expr(node.children[0], {})
        if not isinstance(value, bool):
            raise error("SEM306", "assertion did not evaluate to a boolean",
                        node.children[0].span)
        verdicts.append((node, value))
    return verdicts

"""Source printer for Blackbird ASTs (print -> reparse is structurally stable)."""

from __future__ import annotations

from ..ast import AstNode

_PREC = {"Add": 1, "Sub": 1, "Mul": 2, "Div": 2, "Neg": 3, "Pow": 4}
_BINOP = {"Add": "+", "Sub": "-", "Mul": "*", "Div": "/"}


def _prec(node: AstNode) -> int:
    if node.kind in ("Int", "Real") and node.attrs["value"] < 0:
        return _PREC["Neg"]
    return _PREC.get(node.kind, 5)


def print_expr(node: AstNode) -> str:
    kind = node.kind
    if kind in ("Int", "Real"):
        return repr(node.attrs["value"])
    if kind == "Complex":
        return f"{node.attrs['imag']!r}j"
    if kind == "Bool":
        return "true" if node.attrs["value"] else "false"
    if kind == "Str":
        return f'"{node.attrs["value"]}"'
    if kind == "Name":
        return str(node.attrs["id"])
    if kind == "RegRef":
        return f"{node.attrs['name']}[{node.attrs['index']}]"
    if kind == "Neg":
        return "-" + _child(node.children[0], 3)
    if kind == "Pow":
        return _child(node.children[0], 5) + "**" + _child(node.children[1], 3)
    if kind in _BINOP:
        p = _PREC[kind]
        return f"{_child(node.children[0], p)} {_BINOP[kind]} {_child(node.children[1], p + 1)}"
    raise ValueError(f"not an expression node: {kind}")


def _child(node: AstNode, min_prec: int) -> str:
    text = print_expr(node)
    return f"({text})" if _prec(node) < min_prec else text


def _array(node: AstNode) -> str:
    rows = []
    for row in node.children:
        rows.append("[" + ", ".join(print_expr(e) for e in row.children) + "]")
    return "[" + ", ".join(rows) + "]"


def _line(node: AstNode) -> str:
    kind = node.kind
    if kind == "NameHeader":
        return f"name {node.attrs['name']}"
    if kind == "VersionHeader":
        return f"version {node.attrs['major']}.{node.attrs['minor']}"
    if kind == "Target":
        head = f"target {node.attrs['name']}"
        if node.children:
            opts = ", ".join(f"{o.attrs['name']}={print_expr(o.children[0])}"
                             for o in node.children)
            head += f" ({opts})"
        return head
    if kind == "Decl":
        value = node.children[0]
        rhs = _array(value) if value.kind == "ArrayLiteral" else print_expr(value)
        return f"{node.attrs['decl_type']} {node.attrs['name']} = {rhs}"
    if kind == "ModeStatement":
        head = str(node.attrs["name"])
        args = node.child("Args").children
        modes = node.child("Modes").children
        if args:
            head += "(" + ", ".join(print_expr(a) for a in args) + ")"
        if len(modes) == 1:
            return f"{head} | {modes[0].attrs['value']}"
        return f"{head} | ({', '.join(str(m.attrs['value']) for m in modes)})"
    raise ValueError(f"not a Blackbird statement node: {kind}")


def to_source(node: AstNode) -> str:
    if node.kind == "Program":
        return "\n".join(_line(s) for s in node.children) + ("\n" if node.children else "")
    return _line(node)

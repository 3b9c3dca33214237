"""Source printer for QASM ASTs. Reparsing printed output yields a
structurally identical tree (spans aside)."""

from __future__ import annotations

from ..ast import AstNode

_PREC = {"Add": 1, "Sub": 1, "Mul": 2, "Div": 2, "Neg": 3, "Pow": 4}
_BINOP = {"Add": "+", "Sub": "-", "Mul": "*", "Div": "/"}


def _prec(node: AstNode) -> int:
    if node.kind in ("Int", "Real") and node.attrs["value"] < 0:
        return _PREC["Neg"]  # signed literals reparse through unary minus
    return _PREC.get(node.kind, 5)


def print_expr(node: AstNode) -> str:
    kind = node.kind
    if kind in ("Int", "Real"):
        return repr(node.attrs["value"])
    if kind == "Pi":
        return "pi"
    if kind == "Name":
        return str(node.attrs["id"])
    if kind == "RegRef":
        return f"{node.attrs['name']}[{node.attrs['index']}]"
    if kind == "Neg":
        return "-" + _child(node.children[0], 3)
    if kind == "Pow":
        return _child(node.children[0], 5) + "^" + _child(node.children[1], 3)
    if kind in _BINOP:
        p = _PREC[kind]
        left = _child(node.children[0], p)
        right = _child(node.children[1], p + 1)
        return f"{left} {_BINOP[kind]} {right}"
    raise ValueError(f"not an expression node: {kind}")


def _child(node: AstNode, min_prec: int) -> str:
    text = print_expr(node)
    return f"({text})" if _prec(node) < min_prec else text


def _apply(node: AstNode) -> str:
    args = node.child("Args").children
    targets = node.child("Targets").children
    head = node.attrs["name"]
    if args:
        head += "(" + ", ".join(print_expr(a) for a in args) + ")"
    return f"{head} {', '.join(print_expr(t) for t in targets)};"


def _statement(node: AstNode, indent: str = "") -> str:
    kind = node.kind
    if kind == "Version":
        return f"{indent}OPENQASM {node.attrs['major']}.{node.attrs['minor']};"
    if kind == "Include":
        return f'{indent}include "{node.attrs["path"]}";'
    if kind == "RegisterDecl":
        kw = "qreg" if node.attrs["kind"] == "quantum" else "creg"
        return f"{indent}{kw} {node.attrs['name']}[{node.attrs['size']}];"
    if kind == "GateDef":
        params = [c.attrs["id"] for c in node.child("Params").children]
        qubits = [c.attrs["id"] for c in node.child("Qubits").children]
        head = node.attrs["name"]
        if params:
            head += "(" + ", ".join(params) + ")"
        lines = [f"{indent}gate {head} {', '.join(qubits)} {{"]
        for stmt in node.child("Body").children:
            lines.append(_statement(stmt, indent + "  "))
        lines.append(indent + "}")
        return "\n".join(lines)
    if kind == "GateApply":
        return indent + _apply(node)
    if kind == "Measure":
        src, dst = node.children
        return f"{indent}measure {print_expr(src)} -> {print_expr(dst)};"
    if kind == "Reset":
        return f"{indent}reset {print_expr(node.children[0])};"
    if kind == "Barrier":
        return f"{indent}barrier {', '.join(print_expr(t) for t in node.children)};"
    if kind == "If":
        guarded = _statement(node.children[0])
        return f"{indent}if ({node.attrs['register']} == {node.attrs['value']}) {guarded}"
    raise ValueError(f"not a QASM statement node: {kind}")


def to_source(node: AstNode) -> str:
    if node.kind == "Program":
        return "\n".join(_statement(s) for s in node.children) + ("\n" if node.children else "")
    return _statement(node)

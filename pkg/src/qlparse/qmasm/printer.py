"""Source printer for QMASM ASTs (print -> reparse is structurally stable).

Binary operators are always spaced, and a Weight value that is not a plain
literal is parenthesized, so printed output never trips the signed-literal
lexing rule or the two-field/three-field line classification.
"""

from __future__ import annotations

from ..ast import AstNode

_PREC = {"Or": 1, "And": 2,
         "Eq": 3, "Ne": 3, "Lt": 3, "Gt": 3, "Le": 3, "Ge": 3,
         "Add": 4, "Sub": 4, "Mul": 5, "Div": 5, "Mod": 5,
         "Neg": 6, "Pow": 7}
_BINOP = {"Or": "||", "And": "&&",
          "Eq": "=", "Ne": "/=", "Lt": "<", "Gt": ">", "Le": "<=", "Ge": ">=",
          "Add": "+", "Sub": "-", "Mul": "*", "Div": "/", "Mod": "%"}


def _prec(node: AstNode) -> int:
    if node.kind in ("Int", "Real") and node.attrs["value"] < 0:
        return _PREC["Neg"]
    return _PREC.get(node.kind, 8)


def print_expr(node: AstNode) -> str:
    kind = node.kind
    if kind in ("Int", "Real"):
        return repr(node.attrs["value"])
    if kind == "Bool":
        return "true" if node.attrs["value"] else "false"
    if kind == "Name":
        return str(node.attrs["id"])
    if kind == "Neg":
        return "-" + _child(node.children[0], 6)
    if kind == "Pow":
        return _child(node.children[0], 8) + "**" + _child(node.children[1], 6)
    if kind in ("Eq", "Ne", "Lt", "Gt", "Le", "Ge"):
        # comparisons are non-associative: nested ones need parens
        left = _child(node.children[0], 4)
        right = _child(node.children[1], 4)
        return f"{left} {_BINOP[kind]} {right}"
    if kind in _BINOP:
        p = _PREC[kind]
        return f"{_child(node.children[0], p)} {_BINOP[kind]} {_child(node.children[1], p + 1)}"
    raise ValueError(f"not an expression node: {kind}")


def _child(node: AstNode, min_prec: int) -> str:
    text = print_expr(node)
    return f"({text})" if _prec(node) < min_prec else text


def _value_field(node: AstNode) -> str:
    """Weight/coupling value field: parenthesized unless a plain literal, so the
    printed line keeps its field count when reparsed."""
    if node.kind in ("Int", "Real", "Bool"):
        return print_expr(node)
    return f"({print_expr(node)})"


def _range(node: AstNode) -> str:
    parts = [print_expr(c) for c in node.children]
    if len(parts) == 1:
        return parts[0]
    text = f"{parts[0]} .. {parts[1]}"
    if len(parts) == 3:
        text += f" step {parts[2]}"
    return text


def _lines(node: AstNode, indent: str, out: list[str]) -> None:
    kind = node.kind
    pad = indent
    if kind == "Weight":
        out.append(f"{pad}{node.attrs['symbol']} {_value_field(node.children[0])}")
    elif kind == "Coupling":
        out.append(f"{pad}{node.attrs['symbol1']} {node.attrs['symbol2']} "
                   f"{_value_field(node.children[0])}")
    elif kind == "Chain":
        out.append(f"{pad}{node.attrs['symbol1']} = {node.attrs['symbol2']}")
    elif kind == "AntiChain":
        out.append(f"{pad}{node.attrs['symbol1']} /= {node.attrs['symbol2']}")
    elif kind == "Equiv":
        out.append(f"{pad}{node.attrs['symbol1']} <-> {node.attrs['symbol2']}")
    elif kind == "Pin":
        out.append(f"{pad}{node.attrs['symbol']} := {print_expr(node.children[0])}")
    elif kind == "MacroDef":
        out.append(f"{pad}!begin_macro {node.attrs['name']}")
        for stmt in node.children:
            _lines(stmt, indent + "  ", out)
        out.append(f"{pad}!end_macro {node.attrs['name']}")
    elif kind == "UseMacro":
        insts = "".join(" " + str(c.attrs["id"]) for c in node.children)
        out.append(f"{pad}!use_macro {node.attrs['name']}{insts}")
    elif kind == "Include":
        out.append(f'{pad}!include "{node.attrs["path"]}"')
    elif kind == "Assert":
        out.append(f"{pad}!assert {print_expr(node.children[0])}")
    elif kind == "For":
        out.append(f"{pad}!for {node.attrs['var']} := {_range(node.children[0])}")
        for stmt in node.children[1:]:
            _lines(stmt, indent + "  ", out)
        out.append(f"{pad}!end_for")
    elif kind == "If":
        out.append(f"{pad}!if {print_expr(node.children[0])}")
        for stmt in node.children[1].children:
            _lines(stmt, indent + "  ", out)
        if len(node.children) > 2:
            out.append(f"{pad}!else")
            for stmt in node.children[2].children:
                _lines(stmt, indent + "  ", out)
        out.append(f"{pad}!end_if")
    elif kind == "Let":
        value = node.children[0]
        rhs = _range(value) if value.kind == "Range" else print_expr(value)
        out.append(f"{pad}!let {node.attrs['var']} := {rhs}")
    else:
        raise ValueError(f"not a QMASM statement node: {kind}")


def to_source(node: AstNode) -> str:
    if node.kind == "Program":
        out: list[str] = []
        for stmt in node.children:
            _lines(stmt, "", out)
        return "\n".join(out) + ("\n" if out else "")
    out = []
    _lines(node, "", out)
    return "\n".join(out)

"""The uniform AST node shared by all frontends, plus its serialized forms.

Every parser in this package returns trees of AstNode: a kind name, a source
span, a flat scalar attribute map, and ordered children. Matrices and other
aggregate values are represented as child nodes, never as attribute values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .position import SourcePosition, Span

Scalar = str | int | float | bool


@dataclass(slots=True)
class AstNode:
    kind: str
    span: Span
    attrs: dict[str, Scalar] = field(default_factory=dict)
    children: list["AstNode"] = field(default_factory=list)

    def attr(self, name: str) -> Scalar:
        return self.attrs[name]

    def child(self, kind: str) -> "AstNode | None":
        for node in self.children:
            if node.kind == kind:
                return node
        return None

    def with_attrs(self, **updates: Scalar) -> "AstNode":
        """Copy of this node with some attributes replaced; children are shared."""
        attrs = dict(self.attrs)
        attrs.update(updates)
        return AstNode(self.kind, self.span, attrs, list(self.children))

    def __repr__(self) -> str:
        bits = [self.kind]
        if self.attrs:
            bits.append(",".join(f"{k}={v!r}" for k, v in sorted(self.attrs.items())))
        if self.children:
            bits.append(f"{len(self.children)} children")
        return f"AstNode<{' '.join(bits)}>"


def _pos_obj(pos: SourcePosition) -> dict:
    return {"line": pos.line, "col": pos.column, "off": pos.offset}


def _pos_from(obj: dict) -> SourcePosition:
    return SourcePosition(obj["line"], obj["col"], obj["off"])


def to_plain(node: AstNode) -> dict:
    """The node as the plain-dict form of the JSON schema (kind/span/attrs/children)."""
    return {
        "kind": node.kind,
        "span": {"start": _pos_obj(node.span.start), "end": _pos_obj(node.span.end)},
        "attrs": dict(sorted(node.attrs.items())),
        "children": [to_plain(child) for child in node.children],
    }


def from_plain(obj: dict) -> AstNode:
    span = Span(_pos_from(obj["span"]["start"]), _pos_from(obj["span"]["end"]))
    children = [from_plain(child) for child in obj["children"]]
    return AstNode(obj["kind"], span, dict(obj["attrs"]), children)


def serialize_ast(root: AstNode, format: str = "json") -> str:
    """Serialize a tree. "json" is the bit-exact interchange schema; "pretty"
    is an indented display form. Both are deterministic."""
    if format == "json":
        return json.dumps(to_plain(root), separators=(",", ":"), ensure_ascii=False)
    if format == "pretty":
        lines: list[str] = []
        _pretty(root, 0, lines)
        return "\n".join(lines)
    raise ValueError(f"unknown AST format {format!r}")


def deserialize_ast(text: str) -> AstNode:
    return from_plain(json.loads(text))


def _fmt_scalar(value: Scalar) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    return repr(value)


def _pretty(node: AstNode, depth: int, lines: list[str]) -> None:
    attrs = " ".join(f"{k}={_fmt_scalar(v)}" for k, v in sorted(node.attrs.items()))
    head = node.kind if not attrs else f"{node.kind} {attrs}"
    lines.append(f"{'  ' * depth}{head}  @{node.span}")
    for child in node.children:
        _pretty(child, depth + 1, lines)


def same_structure(a: AstNode, b: AstNode) -> bool:
    """Structural equality ignoring spans (kind, attrs, children)."""
    if a.kind != b.kind or len(a.children) != len(b.children):
        return False
    if a.attrs.keys() != b.attrs.keys():
        return False
    for key, value in a.attrs.items():
        other = b.attrs[key]
        # bool is an int subclass; keep True distinct from 1, and 3 from 3.0.
        if type(value) is not type(other) or value != other:
            return False
    return all(same_structure(x, y) for x, y in zip(a.children, b.children))

"""Rooted trees with monomial edge labels, plus DOT and JSON export.

The four tree constructions in this package (GP-tree, modified GP-tree,
h-tree, h-tableau-tree) all produce :class:`LabeledTree` instances.  Vertex
ids are path strings of edge-exponent choices ("r", "r.0", "r.0.2", ...),
so two runs over the same input serialize identically.
"""

from __future__ import annotations

from collections.abc import Iterator

from .core import Filling, Monomial


class TreeNode:
    __slots__ = ("node_id", "level", "payload", "edge", "children")

    def __init__(self, node_id: str, level, payload, edge: Monomial | None):
        self.node_id = node_id
        self.level = level
        self.payload = payload
        self.edge = edge  # label on the edge from the parent; None at the root
        self.children: list[TreeNode] = []

    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self) -> str:
        return f"TreeNode({self.node_id!r}, level={self.level!r}, payload={self.payload!r})"


def _render_payload(payload, kind: str = "") -> str:
    if payload is None:
        return "*"
    if isinstance(payload, (Monomial, Filling)):
        return str(payload)
    if isinstance(payload, tuple) and payload and all(isinstance(v, int) for v in payload):
        if kind == "h-tableau":  # partial words read like fillings, not shapes
            sep = "," if len(payload) > 9 else ""
            return sep.join(str(v) for v in payload)
        return ",".join(str(v) for v in payload)
    return str(payload)


class LabeledTree:
    """A built tree: immutable after construction, safe to share."""

    def __init__(self, kind: str, n: int, root: TreeNode, level_keys: list):
        self.kind = kind
        self.n = n
        self.root = root
        self.level_keys = list(level_keys)  # top-down order

    def levels(self) -> dict:
        """Mapping level key -> nodes, left to right within each level."""
        out: dict = {key: [] for key in self.level_keys}
        stack = [self.root]
        order: list[TreeNode] = []
        while stack:
            node = stack.pop()
            order.append(node)
            stack.extend(reversed(node.children))
        for node in order:  # depth-first preorder preserves left-to-right order
            out[node.level].append(node)
        return out

    def level(self, key) -> list[TreeNode]:
        return self.levels()[key]

    def leaves(self) -> list[TreeNode]:
        return self.level(self.level_keys[-1])

    def leaf_monomials(self) -> list[Monomial]:
        """Leaf labels left to right; each is the product of its path's edges."""
        return [leaf.payload for leaf in self.leaves()]

    def iter_nodes(self) -> Iterator[TreeNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def path_count(self) -> int:
        return len(self.leaves())

    # -- serialization ------------------------------------------------------

    def to_dot(self) -> str:
        lines = [
            f'digraph "{self.kind}" {{',
            "  graph [ordering=out];",
            "  node [shape=box];",
        ]
        by_level = self.levels()
        for key in self.level_keys:
            for node in by_level[key]:
                label = _render_payload(node.payload, self.kind)
                lines.append(f'  "{node.node_id}" [label="{label}"];')
        for key in self.level_keys:
            for node in by_level[key]:
                for child in node.children:
                    lines.append(
                        f'  "{node.node_id}" -> "{child.node_id}" [label="{child.edge}"];'
                    )
        for key in self.level_keys:
            names = " ".join(f'"{node.node_id}";' for node in by_level[key])
            lines.append(f"  {{ rank=same; {names} }}")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        def encode(node: TreeNode) -> dict:
            entry: dict = {
                "id": node.node_id,
                "level": node.level,
                "label": _render_payload(node.payload, self.kind),
            }
            if node.edge is not None:
                entry["edge"] = str(node.edge)
            if isinstance(node.payload, Monomial):
                entry["monomial"] = node.payload.to_json()
            if isinstance(node.payload, Filling):
                entry["filling"] = node.payload.to_json()
            if node.children:
                entry["children"] = [encode(c) for c in node.children]
            return entry

        return {
            "kind": self.kind,
            "n": self.n,
            "levels": [str(k) for k in self.level_keys],
            "root": encode(self.root),
        }

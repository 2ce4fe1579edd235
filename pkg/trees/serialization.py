"""S-expression form of decorated trees.

::

    node   := "(e" branch ")" | "(p" branch* ")" | "(d" LABEL HALF item* ")"
    branch := INT node
    item   := "L" | branch

``e`` is an edge-vertex, ``p`` a primal vertex and ``d`` a blossoming vertex
with its label and half-degree. ``INT`` is the number of arrows on the
half-edge leading to the node, 0 on dual half-edges. Children and items are
listed clockwise after the parent, so a twig reads ``(e 0 (p))``.
"""

import re
from typing import List, Union

from trees.decorated import LEAFLET, Branch, DecoratedTree, DualNode, EdgeNode, Node, PrimalNode
from utils.errors import MalformedTreeError

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _node_text(node: Node) -> str:
    if isinstance(node, EdgeNode):
        return f"(e {_branch_text(node.child)})"
    if isinstance(node, PrimalNode):
        return "(p" + "".join(" " + _branch_text(branch) for branch in node.children) + ")"
    items = [item if isinstance(item, str) else _branch_text(item) for item in node.items]
    return f"(d {node.label} {node.half_degree}" + "".join(" " + item for item in items) + ")"


def _branch_text(branch: Branch) -> str:
    return f"{branch.arrows} {_node_text(branch.node)}"


def tree_to_text(tree: DecoratedTree) -> str:
    return _node_text(tree)


class _Parser:
    def __init__(self, text: str):
        self.tokens = _TOKEN.findall(text)
        self.position = 0

    def peek(self) -> str:
        if self.position >= len(self.tokens):
            raise MalformedTreeError("unexpected end of tree text")
        return self.tokens[self.position]

    def take(self, expected: str = "") -> str:
        token = self.peek()
        if expected and token != expected:
            raise MalformedTreeError(f"expected {expected!r}, got {token!r} at token {self.position}")
        self.position += 1
        return token

    def integer(self) -> int:
        token = self.take()
        try:
            return int(token)
        except ValueError as exc:
            raise MalformedTreeError(f"expected an integer, got {token!r}") from exc

    def node(self) -> Node:
        self.take("(")
        kind = self.take()
        if kind == "e":
            edge = EdgeNode(self.branch())
            self.take(")")
            return edge
        if kind == "p":
            children: List[Branch] = []
            while self.peek() != ")":
                children.append(self.branch())
            self.take(")")
            return PrimalNode(tuple(children))
        if kind == "d":
            label = self.integer()
            half_degree = self.integer()
            items: List[Union[str, Branch]] = []
            while self.peek() != ")":
                if self.peek() == LEAFLET:
                    items.append(self.take())
                else:
                    items.append(self.branch())
            self.take(")")
            return DualNode(label, half_degree, tuple(items))
        raise MalformedTreeError(f"unknown node kind {kind!r}")

    def branch(self) -> Branch:
        arrows = self.integer()
        return Branch(arrows, self.node())


def tree_from_text(text: str) -> DecoratedTree:
    """Parse the output of ``tree_to_text``.

    Only the syntax is checked; ``validate_decorated_tree`` checks the rules.

    Raises:
        MalformedTreeError: On any syntax error or if the top node is not an
            edge-vertex.
    """
    parser = _Parser(text)
    tree = parser.node()
    if parser.position != len(parser.tokens):
        raise MalformedTreeError(f"trailing text after token {parser.position}")
    if not isinstance(tree, EdgeNode):
        raise MalformedTreeError("a decorated tree is planted on an edge-vertex")
    return tree

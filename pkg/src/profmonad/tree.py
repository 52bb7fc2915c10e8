"""Binary trees with integer labels and their one-line text format.

``L`` is a leaf and ``(N <left> <label> <right>)`` a node, for example
``(N (N L 0 L) 1 (N L 2 L))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Union


@dataclass(frozen=True)
class Leaf:
    def __repr__(self) -> str:
        return "Leaf"


@dataclass(frozen=True)
class Node:
    left: "Tree"
    label: int
    right: "Tree"


Tree = Union[Leaf, Node]

LEAF = Leaf()


class TreeSyntaxError(ValueError):
    pass


def format_tree(t: Tree) -> str:
    if isinstance(t, Leaf):
        return "L"
    return f"(N {format_tree(t.left)} {t.label} {format_tree(t.right)})"


_TOKEN = re.compile(r"\(|\)|L|N|-?[0-9]+| ")


def _tokenize(text: str) -> List[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise TreeSyntaxError(f"unexpected character {text[pos]!r} at {pos}")
        tokens.append(m.group())
        pos = m.end()
    return tokens


def parse_tree(text: str) -> Tree:
    """Parse the exact text format; single spaces only, no padding."""
    tokens = _tokenize(text)
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            found = tokens[pos] if pos < len(tokens) else "end of input"
            raise TreeSyntaxError(f"expected {tok!r}, found {found!r}")
        pos += 1

    def tree():
        nonlocal pos
        if pos < len(tokens) and tokens[pos] == "L":
            pos += 1
            return LEAF
        expect("(")
        expect("N")
        expect(" ")
        left = tree()
        expect(" ")
        if pos >= len(tokens) or not re.fullmatch(r"-?[0-9]+", tokens[pos]):
            raise TreeSyntaxError("expected a decimal label")
        label = int(tokens[pos])
        pos += 1
        expect(" ")
        right = tree()
        expect(")")
        return Node(left, label, right)

    t = tree()
    if pos != len(tokens):
        raise TreeSyntaxError("trailing input after tree")
    return t


def node_value(t):
    return t.label if isinstance(t, Node) else None


def node_left(t):
    return t.left if isinstance(t, Node) else None


def node_right(t):
    return t.right if isinstance(t, Node) else None


def is_leaf(t) -> bool:
    return isinstance(t, Leaf)


def right_spine(t: Tree) -> List[int]:
    out = []
    while isinstance(t, Node):
        out.append(t.label)
        t = t.right
    return out

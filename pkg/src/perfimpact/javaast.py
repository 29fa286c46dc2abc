"""Tree types for parsed Java source and the walks used by feature extraction."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping


class NodeKind(enum.Enum):
    CompilationUnit = 0
    ImportDeclaration = 1
    ClassDeclaration = 2
    MethodDeclaration = 3
    VariableDeclaration = 4
    VariableDeclarator = 5
    MethodExpression = 6
    BlockStatement = 7
    IfStatement = 8
    SwitchStatement = 9
    ConditionalExpression = 10
    ForStatement = 11
    ForEachStatement = 12
    WhileStatement = 13
    DoStatement = 14
    ReturnStatement = 15
    BinaryExpression = 16
    UnaryExpression = 17
    MethodCall = 18
    Identifier = 19
    Literal = 20
    Unknown = 21

    def __lt__(self, other: "NodeKind") -> bool:
        if not isinstance(other, NodeKind):
            return NotImplemented
        return self.value < other.value

    def __str__(self) -> str:
        return self.name

    @classmethod
    def from_name(cls, name: str) -> "NodeKind":
        return cls[name]


ALL_KINDS: frozenset[NodeKind] = frozenset(NodeKind)


@dataclass(frozen=True, eq=True)
class AstNode:
    kind: NodeKind
    span: tuple[int, int]
    children: tuple["AstNode", ...] = ()
    attributes: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "attributes", MappingProxyType(dict(self.attributes)))
        object.__setattr__(self, "children", tuple(self.children))

    def __hash__(self) -> int:
        return id(self)

    def walk(self) -> Iterator["AstNode"]:
        """Yield this node and all descendants, root first."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass(frozen=True)
class Ast:
    root: AstNode
    source_length_chars: int
    file_path: str = "<string>"

    def nodes(self) -> Iterator[AstNode]:
        return self.root.walk()

    def __len__(self) -> int:
        return sum(1 for _ in self.nodes())


def preorder(ast: Ast) -> list[NodeKind]:
    return [node.kind for node in ast.nodes()]


def count_kinds(ast: Ast, kinds: Iterable[NodeKind]) -> int:
    wanted = frozenset(kinds)
    if not wanted:
        return 0
    return sum(1 for node in ast.nodes() if node.kind in wanted)


def kind_histogram(ast: Ast) -> dict[NodeKind, int]:
    counts: dict[NodeKind, int] = {}
    for node in ast.nodes():
        counts[node.kind] = counts.get(node.kind, 0) + 1
    return counts


def dump_ast(ast: Ast) -> str:
    """Render the tree as indented lines, one node per line in preorder.

    Each line is ``<indent><Kind> <attr=k:v ...> [start,end)``; the attribute
    group is omitted for nodes without attributes.
    """
    lines = []
    stack = [(ast.root, 0)]
    while stack:
        node, depth = stack.pop()
        parts = ["  " * depth + node.kind.name]
        if node.attributes:
            parts.append(" ".join(f"attr={k}:{v}" for k, v in sorted(node.attributes.items())))
        parts.append(f"[{node.span[0]},{node.span[1]})")
        lines.append(" ".join(parts))
        stack.extend((child, depth + 1) for child in reversed(node.children))
    return "\n".join(lines) + "\n"

"""Tree and path decompositions, their validation, and export."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..graph import Multigraph, bag_label

PARAMETERS = ("treewidth", "pathwidth")


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags over graph nodes, arranged on a tree whose nodes are bag indices."""

    bags: tuple[frozenset, ...]
    tree: Multigraph

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        if self.tree.n_nodes != len(self.bags):
            raise ValueError(f"tree has {self.tree.n_nodes} nodes for {len(self.bags)} bags")

    @classmethod
    def from_bags(cls, bags: Iterable[Iterable[int]], arcs: Iterable[tuple[int, int]]):
        bags = tuple(frozenset(b) for b in bags)
        return cls(bags, Multigraph.from_arcs(len(bags), arcs))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.bags) if self.bags else frozenset()

    def is_path(self) -> bool:
        if len(self.bags) <= 1:
            return True
        degs = self.tree.degrees()
        return self.tree.is_tree() and max(degs) <= 2

    def to_dict(self) -> dict:
        return {
            "arcs": [list(a) for a in self.tree.arcs],
            "bags": [sorted(b) for b in self.bags],
            "kind": "path" if isinstance(self, PathDecomposition) else "tree",
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TreeDecomposition":
        if data.get("kind") == "path":
            return PathDecomposition.from_sequence(data["bags"])
        return cls.from_bags(data["bags"], [tuple(a) for a in data["arcs"]])

    def to_dot(self, name: str = "decomposition") -> str:
        lines = [f"graph {name} {{", "  node [shape=box];"]
        for i, bag in enumerate(self.bags):
            lines.append(f'  b{i} [label="{bag_label(bag)}"];')
        for u, v in self.tree.arcs:
            lines.append(f"  b{u} -- b{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PathDecomposition(TreeDecomposition):
    """A tree decomposition whose tree is the path ``0 - 1 - ... - (m-1)``."""

    def __post_init__(self):
        super().__post_init__()
        expected = tuple((i, i + 1) for i in range(len(self.bags) - 1))
        if self.tree.arcs != expected:
            raise ValueError("path decomposition bags must be linked in sequence")

    @classmethod
    def from_sequence(cls, bags: Sequence[Iterable[int]]) -> "PathDecomposition":
        bags = tuple(frozenset(b) for b in bags)
        return cls(bags, Multigraph.from_arcs(len(bags), [(i, i + 1) for i in range(len(bags) - 1)]))


@dataclass(frozen=True)
class Violation:
    """A failed decomposition property with the node, arc or bag that breaks it.

    ``rule`` is 1 (coverage), 2 (arc containment), 3 (connected occurrence)
    or 0 for structural problems such as the tree not being a tree.
    """

    rule: int
    witness: tuple
    message: str

    def __str__(self) -> str:
        return self.message


def validate_decomposition(g: Multigraph, d: TreeDecomposition) -> tuple[bool, list[Violation]]:
    out: list[Violation] = []
    if not d.bags:
        out.append(Violation(0, (), "decomposition has no bags"))
    elif not d.tree.is_tree():
        out.append(Violation(0, (), "bag tree is not a tree"))
    for i, bag in enumerate(d.bags):
        for v in bag:
            if not 0 <= v < g.n_nodes:
                out.append(Violation(0, (i, v), f"bag {i} holds {v}, which is not a graph node"))
    covered = d.vertices
    for v in range(g.n_nodes):
        if v not in covered:
            out.append(Violation(1, (v,), f"node {v} is in no bag"))
    for u, v in sorted(set(g.arcs)):
        if not any(u in b and v in b for b in d.bags):
            out.append(Violation(2, (u, v), f"arc {u}-{v} is in no bag"))
    if d.bags and d.tree.is_tree():
        adj = [[] for _ in d.bags]
        for a, b in d.tree.arcs:
            adj[a].append(b)
            adj[b].append(a)
        for v in sorted(covered):
            holders = [i for i, b in enumerate(d.bags) if v in b]
            seen = {holders[0]}
            stack = [holders[0]]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen and v in d.bags[y]:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(holders):
                out.append(Violation(3, (v,), f"bags holding node {v} are not connected in the tree"))
    return not out, out


@dataclass(frozen=True)
class WidthCertificate:
    parameter: str
    value: int
    decomposition: TreeDecomposition
    exact: bool

    def __post_init__(self):
        if self.parameter not in PARAMETERS:
            raise ValueError(f"unknown width parameter {self.parameter!r}")
        if self.decomposition.width != self.value:
            raise ValueError("certificate value does not match its decomposition")
        if self.parameter == "pathwidth" and not self.decomposition.is_path():
            raise ValueError("pathwidth certificate needs a path decomposition")

    def verify(self, g: Multigraph) -> bool:
        return validate_decomposition(g, self.decomposition)[0]

    def to_dict(self) -> dict:
        return {
            "decomposition": self.decomposition.to_dict(),
            "exact": self.exact,
            "parameter": self.parameter,
            "value": self.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "WidthCertificate":
        return cls(
            parameter=data["parameter"],
            value=data["value"],
            decomposition=TreeDecomposition.from_dict(data["decomposition"]),
            exact=data["exact"],
        )

    @classmethod
    def from_json(cls, text: str) -> "WidthCertificate":
        return cls.from_dict(json.loads(text))


def join_decompositions(parts: Sequence[TreeDecomposition]) -> TreeDecomposition:
    """Disjoint union of decompositions, consecutive parts linked by one arc."""
    bags: list[frozenset] = []
    arcs: list[tuple[int, int]] = []
    path = all(isinstance(p, PathDecomposition) for p in parts)
    for part in parts:
        offset = len(bags)
        if bags:
            # path parts are chained end to start, keeping the result a path
            arcs.append((offset - 1, offset) if path else (0, offset))
        bags.extend(part.bags)
        arcs.extend((a + offset, b + offset) for a, b in part.tree.arcs)
    if path:
        return PathDecomposition.from_sequence(bags)
    return TreeDecomposition.from_bags(bags, arcs)

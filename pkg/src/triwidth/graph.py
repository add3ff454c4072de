"""Multigraphs with loops and parallel arcs.

Used both as the dual graph of a triangulation and as the dual graph of a
decomposition into pieces.  Width computations only ever see the simple
underlying graph (see :meth:`Multigraph.simple_adjacency`).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed PACE ``.gr`` input."""


@dataclass(frozen=True)
class Multigraph:
    """Nodes ``0..n_nodes-1`` and a multiset of unordered arcs.

    Arcs are stored as ``(u, v)`` with ``u <= v``, sorted, so equal multigraphs
    compare equal.  A loop is an arc ``(v, v)``.
    """

    n_nodes: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n_nodes < 0:
            raise ValueError("node count must be nonnegative")
        normal = []
        for u, v in self.arcs:
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise ValueError(f"arc ({u}, {v}) has an endpoint out of range")
            normal.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "arcs", tuple(sorted(normal)))

    @classmethod
    def from_arcs(cls, n_nodes: int, arcs: Iterable[Sequence[int]]) -> "Multigraph":
        return cls(n_nodes, tuple((int(a), int(b)) for a, b in arcs))

    def degree(self, v: int) -> int:
        """Degree of ``v``; a loop counts twice."""
        return sum((u == v) + (w == v) for u, w in self.arcs)

    def degrees(self) -> list[int]:
        deg = [0] * self.n_nodes
        for u, v in self.arcs:
            deg[u] += 1
            deg[v] += 1
        return deg

    def multiplicities(self) -> Counter:
        return Counter(self.arcs)

    def simple_adjacency(self) -> list[set[int]]:
        """Adjacency sets of the simple graph: loops dropped, parallels merged."""
        adj: list[set[int]] = [set() for _ in range(self.n_nodes)]
        for u, v in self.arcs:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def simple(self) -> "Multigraph":
        return Multigraph(self.n_nodes, tuple(sorted({a for a in self.arcs if a[0] != a[1]})))

    def components(self) -> list[list[int]]:
        adj = self.simple_adjacency()
        seen = [False] * self.n_nodes
        out = []
        for s in range(self.n_nodes):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n_nodes > 0 and len(self.components()) == 1

    def euler_characteristic(self) -> int:
        return self.n_nodes - len(self.arcs)

    def betti_number(self) -> int:
        """First Betti number: arcs - nodes + components."""
        return len(self.arcs) - self.n_nodes + len(self.components())

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.arcs) == self.n_nodes - 1

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {"arcs": [list(a) for a in self.arcs], "n_nodes": self.n_nodes}

    @classmethod
    def from_dict(cls, data: dict) -> "Multigraph":
        return cls.from_arcs(data["n_nodes"], data["arcs"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Multigraph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "G", labels: Sequence[str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n_nodes):
            if labels is None:
                lines.append(f"  {v};")
            else:
                lines.append(f'  {v} [label="{labels[v]}"];')
        for u, v in self.arcs:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def bag_label(bag: Iterable[int]) -> str:
    """Render a bag as ``{a,c,d}``."""
    return "{" + ",".join(str(v) for v in sorted(bag)) + "}"


def parse_pace(text: str) -> Multigraph:
    """Read a PACE ``.gr`` graph (``p tw <n> <m>`` header, 1-based arcs)."""
    n = m = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "tw":
                raise GraphFormatError(f"line {lineno}: expected 'p tw <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header field") from None
            continue
        if n is None:
            raise GraphFormatError(f"line {lineno}: arc before header")
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two node ids")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer node id") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: node id out of range 1..{n}")
        arcs.append((u - 1, v - 1))
    if n is None:
        raise GraphFormatError("missing 'p tw' header")
    if m != len(arcs):
        raise GraphFormatError(f"header announces {m} arcs, found {len(arcs)}")
    return Multigraph.from_arcs(n, arcs)


def to_pace(g: Multigraph) -> str:
    lines = [f"p tw {g.n_nodes} {len(g.arcs)}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.arcs]
    return "\n".join(lines) + "\n"

"""Nice tree decompositions.

A nice decomposition is rooted and every bag is one of

* ``leaf``: no children,
* ``introduce``: one child, which lacks exactly one node of this bag,
* ``forget``: one child, which has exactly one node more,
* ``join``: two children, both with this very bag.

:func:`to_nice` first makes the input *smooth*: every bag gets exactly
``width + 1`` nodes and neighbouring bags differ in one node each way.  A
smooth decomposition of an ``n``-node graph has ``n - width`` bags, and each
tree arc then becomes one forget and one introduce.  Counting leaves ``L`` and
smooth bags ``m``, the result has ``2m + 2L - 3 < 4n`` bags.  Leaves are
shrunk to a single node followed by introduces whenever the total still stays
within ``4n``; this always holds for path decompositions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..graph import Multigraph, bag_label
from .decomposition import TreeDecomposition, validate_decomposition

KINDS = ("leaf", "introduce", "forget", "join")


@dataclass(frozen=True)
class NiceTreeDecomposition:
    bags: tuple[frozenset, ...]
    children: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    root: int

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def count(self, kind: str) -> int:
        return sum(1 for k in self.kinds if k == kind)

    def as_tree_decomposition(self) -> TreeDecomposition:
        arcs = [(p, c) for p, cs in enumerate(self.children) for c in cs]
        return TreeDecomposition.from_bags(self.bags, arcs)

    def to_dict(self) -> dict:
        return {
            "bags": [
                {"children": list(cs), "id": i, "kind": k, "nodes": sorted(b)}
                for i, (b, cs, k) in enumerate(zip(self.bags, self.children, self.kinds))
            ],
            "join_bags": self.count("join"),
            "root": self.root,
            "width": self.width,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "NiceTreeDecomposition":
        rows = sorted(data["bags"], key=lambda r: r["id"])
        return cls(
            bags=tuple(frozenset(r["nodes"]) for r in rows),
            children=tuple(tuple(r["children"]) for r in rows),
            kinds=tuple(r["kind"] for r in rows),
            root=data["root"],
        )

    @classmethod
    def from_json(cls, text: str) -> "NiceTreeDecomposition":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "nice") -> str:
        lines = [f"digraph {name} {{", "  node [shape=box];"]
        for i, (bag, kind) in enumerate(zip(self.bags, self.kinds)):
            lines.append(f'  b{i} [label="{kind} {bag_label(bag)}"];')
        for p, cs in enumerate(self.children):
            for c in cs:
                lines.append(f"  b{p} -> b{c};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def count_join_bags(nice: NiceTreeDecomposition) -> int:
    return nice.count("join")


def check_nice(nice: NiceTreeDecomposition, g: Multigraph | None = None) -> list[str]:
    """Problems with ``nice``; an empty list means it is a valid nice decomposition."""
    problems = []
    seen = set()
    stack = [nice.root]
    while stack:
        x = stack.pop()
        if x in seen:
            problems.append(f"bag {x} reached twice")
            continue
        seen.add(x)
        stack.extend(nice.children[x])
    if len(seen) != len(nice.bags):
        problems.append("some bags are not below the root")
    for i, (bag, cs, kind) in enumerate(zip(nice.bags, nice.children, nice.kinds)):
        kids = [nice.bags[c] for c in cs]
        if kind == "leaf":
            ok = not cs
        elif kind == "introduce":
            ok = len(cs) == 1 and kids[0] < bag and len(bag - kids[0]) == 1
        elif kind == "forget":
            ok = len(cs) == 1 and bag < kids[0] and len(kids[0] - bag) == 1
        elif kind == "join":
            ok = len(cs) == 2 and kids[0] == bag and kids[1] == bag
        else:
            ok = False
        if not ok:
            problems.append(f"bag {i} does not satisfy the {kind} rule")
    if g is not None:
        valid, violations = validate_decomposition(g, nice.as_tree_decomposition())
        problems.extend(str(v) for v in violations)
    return problems


# -- smoothing -----------------------------------------------------------------


def _adjacency(bags: list, arcs) -> list[set[int]]:
    adj = [set() for _ in bags]
    for a, b in arcs:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _contract(bags: list[set], adj: list[set[int]], mark: list[bool], pred) -> tuple[list[set], list[set[int]], list[bool]]:
    """Merge every tree arc ``(a, b)`` with ``pred(bag_a, bag_b)`` into ``b``."""
    alive = [True] * len(bags)
    changed = True
    while changed:
        changed = False
        for a in range(len(bags)):
            if not alive[a]:
                continue
            for b in sorted(adj[a]):
                if pred(bags[a], bags[b]):
                    for c in adj[a] - {b}:
                        adj[c].discard(a)
                        adj[c].add(b)
                        adj[b].add(c)
                    adj[b].discard(a)
                    mark[b] = mark[b] or mark[a]
                    alive[a] = False
                    changed = True
                    break
    keep = [i for i in range(len(bags)) if alive[i]]
    renum = {old: new for new, old in enumerate(keep)}
    return (
        [bags[i] for i in keep],
        [{renum[j] for j in adj[i]} for i in keep],
        [mark[i] for i in keep],
    )


def smooth(d: TreeDecomposition, mark: int | None = None) -> tuple[list[frozenset], list[set[int]], int | None]:
    """Smooth version of ``d`` as (bags, tree adjacency, index of marked bag).

    ``mark`` names an input bag; the returned index is a smooth bag that
    contains it, so callers can keep a chosen root.
    """
    bags = [set(b) for b in d.bags]
    adj = _adjacency(bags, d.tree.arcs)
    marks = [i == mark for i in range(len(bags))]
    width = d.width
    bags, adj, marks = _contract(bags, adj, marks, lambda a, b: a <= b)
    # grow every bag to width + 1 from an already full neighbour
    start = max(range(len(bags)), key=lambda i: (len(bags[i]), -i))
    order, seen = [start], {start}
    for x in order:
        for y in sorted(adj[x]):
            if y not in seen:
                seen.add(y)
                order.append(y)
                spare = sorted(bags[x] - bags[y])
                bags[y] |= set(spare[: width + 1 - len(bags[y])])
    bags, adj, marks = _contract(bags, adj, marks, lambda a, b: a == b)
    # split arcs whose bags differ in more than one node
    out_bags = [frozenset(b) for b in bags]
    out_adj = [set(a) for a in adj]
    for a in range(len(bags)):
        for b in sorted(adj[a]):
            if a > b:
                continue
            drop = sorted(bags[a] - bags[b])
            add = sorted(bags[b] - bags[a])
            prev, cur = a, set(bags[a])
            for x, y in zip(drop[:-1], add[:-1]):
                cur = (cur - {x}) | {y}
                out_bags.append(frozenset(cur))
                out_adj.append(set())
                node = len(out_bags) - 1
                out_adj[prev].discard(b)
                out_adj[b].discard(prev)
                out_adj[prev].add(node)
                out_adj[node].update({prev, b})
                out_adj[b].add(node)
                prev = node
    marked = marks.index(True) if True in marks else None
    return out_bags, out_adj, marked


# -- conversion ---------------------------------------------------------------


def to_nice(d: TreeDecomposition, root: int | None = None) -> NiceTreeDecomposition:
    """Nice decomposition of the same width as ``d``.

    The root is the lowest-index leaf of the smoothed tree (so a path input
    needs no join bags) unless ``root`` names an input bag to root at.
    """
    n = len(d.vertices)
    if n == 0:
        return NiceTreeDecomposition((frozenset(),), ((),), ("leaf",), 0)
    bags, adj, marked = smooth(d, root)
    if root is not None:
        top = marked
    else:
        top = min((i for i in range(len(bags)) if len(adj[i]) <= 1), default=0)

    kids: list[list[int]] = [[] for _ in bags]
    order, seen = [top], {top}
    for x in order:
        for y in sorted(adj[x]):
            if y not in seen:
                seen.add(y)
                kids[x].append(y)
                order.append(y)
    leaves = [i for i in range(len(bags)) if not kids[i]]
    m = len(bags)
    base = 2 * m + 2 * len(leaves) - 3 if m > 1 else 1
    shrink = base + sum(len(bags[i]) - 1 for i in leaves) <= 4 * n

    out_bags: list[frozenset] = []
    out_kids: list[tuple[int, ...]] = []
    out_kinds: list[str] = []

    def emit(bag, children, kind) -> int:
        out_bags.append(frozenset(bag))
        out_kids.append(tuple(children))
        out_kinds.append(kind)
        return len(out_bags) - 1

    def leaf_chain(bag: frozenset) -> int:
        nodes = sorted(bag)
        if not shrink:
            return emit(bag, (), "leaf")
        cur = emit(nodes[:1], (), "leaf")
        for i in range(2, len(nodes) + 1):
            cur = emit(nodes[:i], (cur,), "introduce")
        return cur

    def step(child_top: int, child_bag: frozenset, target: frozenset) -> int:
        """Forget then introduce along one arc; returns the node with bag ``target``."""
        cur, bag = child_top, set(child_bag)
        for x in sorted(child_bag - target):
            bag.discard(x)
            cur = emit(bag, (cur,), "forget")
        for y in sorted(target - child_bag):
            bag.add(y)
            cur = emit(bag, (cur,), "introduce")
        return cur

    built: dict[int, int] = {}
    for x in reversed(order):
        if not kids[x]:
            built[x] = leaf_chain(bags[x])
            continue
        branches = [step(built[c], bags[c], bags[x]) for c in kids[x]]
        cur = branches[0]
        for other in branches[1:]:
            cur = emit(bags[x], (cur, other), "join")
        built[x] = cur
    return NiceTreeDecomposition(tuple(out_bags), tuple(out_kids), tuple(out_kinds), built[top])

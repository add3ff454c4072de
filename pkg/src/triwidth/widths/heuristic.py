"""Greedy upper bounds for treewidth and pathwidth.

Both heuristics are deterministic: ties go to the lowest node index.
"""

from __future__ import annotations

from collections import deque

from ..graph import Multigraph
from .decomposition import PathDecomposition, TreeDecomposition, WidthCertificate, join_decompositions

STRATEGIES = ("min_degree", "min_fill")


def _check_strategy(strategy: str) -> None:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")


def _fill_in(adj: dict[int, set[int]], v: int) -> int:
    nbrs = sorted(adj[v])
    return sum(1 for i, a in enumerate(nbrs) for b in nbrs[i + 1 :] if b not in adj[a])


def elimination_ordering(g: Multigraph, strategy: str = "min_degree") -> list[int]:
    _check_strategy(strategy)
    adj = {v: set(nb) for v, nb in enumerate(g.simple_adjacency())}
    order = []
    while adj:
        if strategy == "min_degree":
            v = min(adj, key=lambda u: (len(adj[u]), u))
        else:
            v = min(adj, key=lambda u: (_fill_in(adj, u), len(adj[u]), u))
        nbrs = adj.pop(v)
        for a in nbrs:
            adj[a].discard(v)
            adj[a] |= nbrs - {a}
        order.append(v)
    return order


def decomposition_from_ordering(g: Multigraph, order: list[int]) -> TreeDecomposition:
    """Tree decomposition induced by eliminating nodes in ``order``.

    The bag of ``v`` is ``v`` with its later neighbours in the fill graph; it
    hangs below the bag of the earliest of those neighbours.  Roots of separate
    components are linked in order so the result is one tree.
    """
    if g.n_nodes == 0:
        return TreeDecomposition.from_bags([()], [])
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(nb) for nb in g.simple_adjacency()]
    bags, arcs, roots = [], [], []
    for v in order:
        later = {u for u in adj[v] if pos[u] > pos[v]}
        for a in later:
            adj[a] |= later - {a}
        bags.append(frozenset(later | {v}))
        if later:
            arcs.append((pos[v], pos[min(later, key=pos.__getitem__)]))
        else:
            roots.append(pos[v])
    arcs.extend(zip(roots, roots[1:]))
    return TreeDecomposition.from_bags(bags, arcs)


def heuristic_treewidth(g: Multigraph, strategy: str = "min_degree") -> WidthCertificate:
    d = decomposition_from_ordering(g, elimination_ordering(g, strategy))
    return WidthCertificate("treewidth", d.width, d, exact=False)


def path_from_layout(g: Multigraph, layout: list[int]) -> PathDecomposition:
    """Path decomposition whose i-th bag is node ``layout[i]`` plus every earlier
    node that still has a neighbour at position ``i`` or later."""
    if not layout:
        return PathDecomposition.from_sequence([()])
    adj = g.simple_adjacency()
    pos = {v: i for i, v in enumerate(layout)}
    last = {v: max([pos[u] for u in adj[v]] + [pos[v]]) for v in layout}
    bags = []
    live: set[int] = set()
    for i, v in enumerate(layout):
        live = {u for u in live if last[u] >= i}
        bags.append(frozenset(live | {v}))
        live.add(v)
    return PathDecomposition.from_sequence(bags)


def _far_vertex(adj, start, allowed) -> int:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in allowed and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return max(dist, key=lambda u: (dist[u], -len(adj[u]), -u))


def _greedy_layout(adj, comp: list[int], start: int, strategy: str) -> tuple[int, list[int]]:
    placed: set[int] = set()
    out_count = {v: len(adj[v]) for v in comp}
    boundary: set[int] = set()
    frontier: set[int] = set()
    layout = []
    worst = 0

    def place(v):
        nonlocal worst
        placed.add(v)
        frontier.discard(v)
        for u in adj[v]:
            out_count[u] -= 1
            if u not in placed:
                frontier.add(u)
            elif out_count[u] == 0:
                boundary.discard(u)
        if out_count[v]:
            boundary.add(v)
        layout.append(v)
        worst = max(worst, len(boundary))

    place(start)
    while len(placed) < len(comp):
        best = None
        for v in frontier:
            gain = sum(1 for u in adj[v] if u in boundary and out_count[u] == 1)
            # out_count[v] already counts only unplaced neighbours
            size = len(boundary) + (1 if out_count[v] else 0) - gain
            tie = len(adj[v]) if strategy == "min_degree" else out_count[v]
            key = (size, tie, v)
            if best is None or key < best:
                best = key
        place(best[2])
    return worst, layout


def heuristic_pathwidth(g: Multigraph, strategy: str = "min_degree") -> WidthCertificate:
    """Greedy vertex-separation layout, started from a peripheral and a
    minimum-degree node of each component; the better layout is kept."""
    _check_strategy(strategy)
    adj = g.simple_adjacency()
    parts = []
    for comp in g.simple().components():
        members = set(comp)
        low = min(comp, key=lambda u: (len(adj[u]), u))
        far = _far_vertex(adj, _far_vertex(adj, comp[0], members), members)
        best = None
        for start in dict.fromkeys((far, low)):
            worst, layout = _greedy_layout(adj, comp, start, strategy)
            if best is None or worst < best[0]:
                best = (worst, layout)
        parts.append(path_from_layout(g, best[1]))
    d = join_decompositions(parts) if parts else path_from_layout(g, [])
    return WidthCertificate("pathwidth", d.width, d, exact=False)


def heuristic_width(g: Multigraph, parameter: str = "treewidth", strategy: str = "min_degree") -> WidthCertificate:
    if parameter == "treewidth":
        return heuristic_treewidth(g, strategy)
    if parameter == "pathwidth":
        return heuristic_pathwidth(g, strategy)
    raise ValueError(f"unknown width parameter {parameter!r}")

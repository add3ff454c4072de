"""Exact treewidth and pathwidth for small graphs.

Both solvers work per connected component of the simple underlying graph,
with node sets encoded as integer bitmasks, and test widths ``k`` upward from
a cheap lower bound until one is feasible.  A heuristic decomposition supplies
the upper bound, so the search stops there at the latest.

Treewidth: ``C`` is a connected set hanging below the separator ``N(C)``.  It
can be decomposed within width ``k`` iff ``|N(C)| <= k`` and either
``C ∪ N(C)`` fits in one bag, or some ``v`` in ``C`` can be eliminated last,
leaving components of ``C - v`` that are feasible themselves.  Any node of a
component may be eliminated last overall, so the top level fixes the
lowest-index node.

Pathwidth equals vertex separation number: order the nodes so that every
prefix ``S`` has at most ``k`` members with a neighbour outside ``S``.  The
search explores prefixes depth first.  Adding a node that does not enlarge
that boundary never hurts, so such moves are taken greedily.
"""

from __future__ import annotations

import sys
from typing import Callable

from ..graph import Multigraph
from .decomposition import PathDecomposition, TreeDecomposition, WidthCertificate, join_decompositions
from .heuristic import decomposition_from_ordering, elimination_ordering, heuristic_pathwidth, path_from_layout

DEFAULT_CUTOFF = 20


class CutoffExceeded(ValueError):
    """The graph is too large for the exact solver at the configured cutoff."""

    def __init__(self, size: int, cutoff: int):
        super().__init__(
            f"a component has {size} nodes, above the exact-solver cutoff of {cutoff}; "
            "use the heuristic solver or raise the cutoff"
        )
        self.size = size
        self.cutoff = cutoff


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Component:
    """One connected component, relabelled ``0..m-1`` with bitmask adjacency."""

    def __init__(self, nodes: list[int], adjacency: list[set[int]]):
        self.nodes = nodes
        local = {v: i for i, v in enumerate(nodes)}
        self.adj = [sum(1 << local[u] for u in adjacency[v]) for v in nodes]
        self.size = len(nodes)
        self.full = (1 << self.size) - 1

    def nbr(self, mask: int) -> int:
        m = 0
        for u in _bits(mask):
            m |= self.adj[u]
        return m & ~mask

    def parts(self, mask: int) -> list[int]:
        out = []
        while mask:
            comp = frontier = mask & -mask
            while frontier:
                grown = self.nbr(frontier) & mask & ~comp
                comp |= grown
                frontier = grown
            out.append(comp)
            mask &= ~comp
        return out

    def graph(self) -> Multigraph:
        arcs = [(i, j) for i in range(self.size) for j in _bits(self.adj[i]) if i < j]
        return Multigraph.from_arcs(self.size, arcs)


def degeneracy(g: Multigraph) -> int:
    """Largest minimum degree over subgraphs; a lower bound on treewidth."""
    adj = {v: set(nb) for v, nb in enumerate(g.simple_adjacency())}
    best = 0
    while adj:
        v = min(adj, key=lambda u: (len(adj[u]), u))
        best = max(best, len(adj[v]))
        for u in adj.pop(v):
            adj[u].discard(v)
    return best


def contraction_degeneracy(g: Multigraph) -> int:
    """Lower bound on treewidth: repeatedly contract a minimum-degree node into
    its lowest-degree neighbour, recording the largest minimum degree seen."""
    adj = {v: set(nb) for v, nb in enumerate(g.simple_adjacency())}
    best = 0
    while len(adj) > 1:
        v = min(adj, key=lambda u: (len(adj[u]), u))
        best = max(best, len(adj[v]))
        nbrs = adj.pop(v)
        for u in nbrs:
            adj[u].discard(v)
        if nbrs:
            w = min(nbrs, key=lambda u: (len(adj[u]), u))
            for u in nbrs - {w}:
                adj[u].add(w)
                adj[w].add(u)
    return best


# -- treewidth ----------------------------------------------------------------


def _tw_feasible(comp: _Component, k: int) -> list[frozenset] | None:
    """Bags and parent links of a width-``k`` decomposition, or None."""
    memo: dict[int, int | None] = {}  # block -> node eliminated last, -1 for a single bag

    def feasible(block: int) -> bool:
        if block in memo:
            return memo[block] is not None
        sep = comp.nbr(block)
        choice = None
        if _popcount(sep) + _popcount(block) <= k + 1:
            choice = -1
        else:
            for v in _bits(block):
                if all(
                    _popcount(comp.nbr(c)) <= k and feasible(c)
                    for c in comp.parts(block & ~(1 << v))
                ):
                    choice = v
                    break
        memo[block] = choice
        return choice is not None

    root = 0
    top = comp.parts(comp.full & ~1)
    if comp.size > k + 1 and not all(_popcount(comp.nbr(c)) <= k and feasible(c) for c in top):
        return None

    bags: list[int] = []
    arcs: list[tuple[int, int]] = []

    def emit(mask: int, parent: int | None) -> int:
        bags.append(mask)
        idx = len(bags) - 1
        if parent is not None:
            arcs.append((parent, idx))
        return idx

    def build(block: int, parent: int):
        v = memo[block]
        sep = comp.nbr(block)
        if v == -1:
            emit(block | sep, parent)
            return
        me = emit(sep | (1 << v), parent)
        for c in comp.parts(block & ~(1 << v)):
            build(c, me)

    if comp.size <= k + 1:
        emit(comp.full, None)
    else:
        me = emit(1 << root, None)
        for c in top:
            build(c, me)
    return bags, arcs


def _run_deep(fn: Callable, *args):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10_000))
    try:
        return fn(*args)
    finally:
        sys.setrecursionlimit(old)


def _components(g: Multigraph, cutoff: int | None) -> list[_Component]:
    simple = g.simple()
    adjacency = simple.simple_adjacency()
    comps = [_Component(nodes, adjacency) for nodes in simple.components()]
    if cutoff is not None:
        for c in comps:
            if c.size > cutoff:
                raise CutoffExceeded(c.size, cutoff)
    return comps


def _lift(comp: _Component, bags: list[int]) -> list[frozenset]:
    return [frozenset(comp.nodes[i] for i in _bits(b)) for b in bags]


def exact_treewidth(g: Multigraph, cutoff: int | None = DEFAULT_CUTOFF) -> WidthCertificate:
    """Optimal tree decomposition.  ``cutoff`` bounds the node count of each
    connected component of the simplified graph (None disables the check)."""
    parts = []
    for comp in _components(g, cutoff):
        local = comp.graph()
        heuristic = decomposition_from_ordering(local, elimination_ordering(local, "min_fill"))
        lower = contraction_degeneracy(local)
        found = None
        for k in range(lower, heuristic.width):
            found = _run_deep(_tw_feasible, comp, k)
            if found is not None:
                break
        if found is None:
            bags = [frozenset(comp.nodes[i] for i in b) for b in heuristic.bags]
            parts.append(TreeDecomposition.from_bags(bags, heuristic.tree.arcs))
        else:
            masks, arcs = found
            parts.append(TreeDecomposition.from_bags(_lift(comp, masks), arcs))
    d = join_decompositions(parts) if parts else TreeDecomposition.from_bags([()], [])
    return WidthCertificate("treewidth", d.width, d, exact=True)


# -- pathwidth ------------------------------------------------------------------


def _vs_layout(comp: _Component, k: int) -> list[int] | None:
    """A node order of vertex separation at most ``k``, or None."""
    adj, full = comp.adj, comp.full

    def boundary(s: int) -> int:
        b = 0
        for u in _bits(s):
            if adj[u] & ~s:
                b |= 1 << u
        return b

    def gains(s: int, b: int) -> dict[int, int]:
        # boundary nodes whose last outside neighbour is v leave when v is added
        out: dict[int, int] = {}
        for u in _bits(b):
            rest = adj[u] & ~s
            if rest & (rest - 1) == 0:
                out[rest] = out.get(rest, 0) + 1
        return out

    def close(s: int, b: int) -> tuple[int, int, list[int]]:
        added = []
        while True:
            gain = gains(s, b)
            cand = comp.nbr(b) & ~s if s else full
            for v in _bits(cand):
                bit = 1 << v
                grow = 1 if adj[v] & ~(s | bit) else 0
                if grow <= gain.get(bit, 0):
                    s |= bit
                    b = boundary(s)
                    added.append(v)
                    break
            else:
                return s, b, added

    start, b0, steps = close(0, 0)
    parent: dict[int, tuple[int | None, list[int]]] = {start: (None, steps)}
    stack = [(start, b0)]
    while stack:
        s, b = stack.pop()
        if s == full:
            layout: list[int] = []
            node: int | None = s
            while node is not None:
                prev, steps = parent[node]
                layout[:0] = steps
                node = prev
            return layout
        gain = gains(s, b)
        size = _popcount(b)
        for v in _bits(full & ~s):
            bit = 1 << v
            grow = 1 if adj[v] & ~(s | bit) else 0
            if size + grow - gain.get(bit, 0) <= k:
                t, bt, more = close(s | bit, boundary(s | bit))
                if t not in parent:
                    parent[t] = (s, [v] + more)
                    stack.append((t, bt))
    return None


def exact_pathwidth(g: Multigraph, cutoff: int | None = DEFAULT_CUTOFF) -> WidthCertificate:
    """Optimal path decomposition via vertex separation; ``cutoff`` as for
    :func:`exact_treewidth`."""
    parts = []
    for comp in _components(g, cutoff):
        local = comp.graph()
        heuristic = heuristic_pathwidth(local).decomposition
        lower = contraction_degeneracy(local)
        layout = None
        for k in range(lower, heuristic.width):
            layout = _vs_layout(comp, k)
            if layout is not None:
                break
        if layout is None:
            bags = [frozenset(comp.nodes[i] for i in b) for b in heuristic.bags]
            parts.append(PathDecomposition.from_sequence(bags))
        else:
            d = path_from_layout(local, layout)
            parts.append(PathDecomposition.from_sequence([frozenset(comp.nodes[i] for i in b) for b in d.bags]))
    d = join_decompositions(parts) if parts else PathDecomposition.from_sequence([()])
    return WidthCertificate("pathwidth", d.width, d, exact=True)


def exact_width(g: Multigraph, parameter: str = "treewidth", cutoff: int | None = DEFAULT_CUTOFF) -> WidthCertificate:
    if parameter == "treewidth":
        return exact_treewidth(g, cutoff)
    if parameter == "pathwidth":
        return exact_pathwidth(g, cutoff)
    raise ValueError(f"unknown width parameter {parameter!r}")

"""Graph families shared by the width tests."""

import random

from triwidth.graph import Multigraph


def grid(k):
    arcs = [(i * k + j, i * k + j + 1) for i in range(k) for j in range(k - 1)]
    arcs += [(i * k + j, (i + 1) * k + j) for i in range(k - 1) for j in range(k)]
    return Multigraph.from_arcs(k * k, arcs)


def complete(n):
    return Multigraph.from_arcs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def binary_tree(h):
    n = 2 ** (h + 1) - 1
    return Multigraph.from_arcs(n, [(v, (v - 1) // 2) for v in range(1, n)])


def random_tree(rng, n, extras=0):
    """Random labelled tree plus ``extras`` loops or repeated arcs."""
    arcs = [(v, rng.randrange(v)) for v in range(1, n)]
    for _ in range(extras):
        if rng.random() < 0.5 or not arcs:
            v = rng.randrange(n)
            arcs.append((v, v))
        else:
            arcs.append(rng.choice(arcs))
    return Multigraph.from_arcs(n, arcs)


def random_connected(rng, n, p):
    """Random connected graph: a random spanning tree plus arcs with probability p."""
    arcs = {(rng.randrange(v), v) for v in range(1, n)}
    arcs |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Multigraph.from_arcs(n, sorted(arcs))


def oracle_set(count=200, seed=7, max_nodes=12):
    rng = random.Random(seed)
    return [random_connected(rng, rng.randint(1, max_nodes), rng.random() * 0.6) for _ in range(count)]

"""Independent skeleton computation used to certify the test corpus.

Works from the raw gluing rows with networkx components, explicit link
surfaces and brute-force orientation search, sharing no code with the
package.
"""

from itertools import combinations, product

import networkx as nx


def _partner(n, rows):
    out = {}
    for a, f, b, g, perm in rows:
        p = [int(c) for c in perm]
        inv = [0] * 4
        for i, j in enumerate(p):
            inv[j] = i
        out[(a, f)] = (b, g, p)
        out[(b, g)] = (a, f, inv)
    return out


def _perm_sign(p):
    inv = sum(1 for i, j in combinations(range(4), 2) if p[i] > p[j])
    return -1 if inv % 2 else 1


def skeleton_facts(n, rows):
    """Facts about the triangulation with ``n`` tetrahedra and gluing ``rows``
    ``(src_tet, src_face, dst_tet, dst_face, "perm")``."""
    partner = _partner(n, rows)

    # vertices: (tet, v) identified across every gluing that keeps v
    vg = nx.Graph()
    vg.add_nodes_from((t, v) for t in range(n) for v in range(4))
    # directed edges: (tet, a, b) for a != b
    eg = nx.Graph()
    eg.add_nodes_from((t, a, b) for t in range(n) for a in range(4) for b in range(4) if a != b)
    for (t, f), (u, g, p) in partner.items():
        for v in range(4):
            if v != f:
                vg.add_edge((t, v), (u, p[v]))
        for a in range(4):
            for b in range(4):
                if a != b and f not in (a, b):
                    eg.add_edge((t, a, b), (u, p[a], p[b]))
    vcomp = {x: i for i, c in enumerate(nx.connected_components(vg)) for x in c}
    V = len(set(vcomp.values()))
    dcomps = list(nx.connected_components(eg))
    reversed_edge = False
    ecls = {}
    for i, c in enumerate(dcomps):
        for t, a, b in c:
            if (t, b, a) in c:
                reversed_edge = True
            ecls[(t, min(a, b), max(a, b))] = None
    # an undirected edge class is a pair of directed classes (or one, if reversed)
    und = nx.Graph()
    for c in dcomps:
        und.add_node(id(c))
    dindex = {x: id(c) for c in dcomps for x in c}
    for t, a, b in dindex:
        und.add_edge(dindex[(t, a, b)], dindex[(t, b, a)])
    E = nx.number_connected_components(und)
    F = 4 * n - len(rows)

    # vertex links: corner triangles (t, v) with sides opposite each w != v
    links = {}
    for cls in set(vcomp.values()):
        corners = [x for x in vcomp if vcomp[x] == cls]
        lv = nx.Graph()
        sides = set()
        for t, v in corners:
            for w in range(4):
                if w != v:
                    lv.add_node((t, v, w))
            for f in range(4):
                if f != v:
                    sides.add((t, v, f))
        glued = 0
        open_side = False
        for t, v, f in sides:
            if (t, f) in partner:
                u, g, p = partner[(t, f)]
                glued += 1
                for w in range(4):
                    if w not in (v, f):
                        lv.add_edge((t, v, w), (u, p[v], p[w]))
            else:
                open_side = True
        n_vertices = nx.number_connected_components(lv)
        n_edges = len(sides) - glued // 2
        chi = n_vertices - n_edges + len(corners)
        if not open_side and chi == 2:
            kind = "sphere"
        elif open_side and chi == 1:
            kind = "disk"
        else:
            kind = "other"
        links[cls] = kind

    # boundary surfaces: unglued faces joined along shared edge classes
    bfaces = [(t, f) for t in range(n) for f in range(4) if (t, f) not in partner]
    bg = nx.Graph()
    bg.add_nodes_from(bfaces)
    edge_owner = {}
    for t, f in bfaces:
        for a, b in combinations([x for x in range(4) if x != f], 2):
            key = dindex[(t, a, b)]
            key = min(key, dindex[(t, b, a)])
            for other in edge_owner.get(key, []):
                bg.add_edge(other, (t, f))
            edge_owner.setdefault(key, []).append((t, f))
    genera = []
    for comp in nx.connected_components(bg):
        verts = {vcomp[(t, v)] for t, f in comp for v in range(4) if v != f}
        edges = {
            frozenset((dindex[(t, a, b)], dindex[(t, b, a)]))
            for t, f in comp
            for a, b in combinations([x for x in range(4) if x != f], 2)
        }
        chi = len(verts) - len(edges) + len(comp)
        genera.append((2 - chi) // 2)

    orientable = None
    if n <= 14:
        orientable = any(
            all(s[u] == -_perm_sign(p) * s[t] for (t, f), (u, g, p) in partner.items())
            for s in ([1] + list(rest) for rest in product((1, -1), repeat=n - 1))
        )
    return {
        "V": V,
        "E": E,
        "F": F,
        "chi": V - E + F - n,
        "reversed_edge": reversed_edge,
        "link_types": sorted(links.values()),
        "closed": len(rows) == 2 * n and all(k == "sphere" for k in links.values()) and not reversed_edge,
        "boundary_genera": sorted(genera),
        "orientable": orientable,
    }

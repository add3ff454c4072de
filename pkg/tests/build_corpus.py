"""Regenerate tests/corpus: triangulation files, a PACE grid and manifest.json.

Run with ``python3 tests/build_corpus.py``.  Searches are seeded, so the output
is reproducible.  Every file is certified by ``oracle_skeleton`` and the
oracle's facts are frozen into the manifest for the test suite.
"""

import json
import random
import sys
from itertools import permutations
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from oracle_skeleton import skeleton_facts  # noqa: E402

CORPUS = HERE / "corpus"
PERMS = ["".join(map(str, p)) for p in permutations(range(4))]


def tri_text(n, rows, comment=None):
    lines = [f"tets {n}"]
    if comment:
        lines.insert(0, f"# {comment}")
    for a, f, b, g, p in sorted(rows):
        lines.append(f"{a} {f} -> {b} {g} {p}")
    return "\n".join(lines) + "\n"


def canonical_rows(rows):
    out = []
    for a, f, b, g, p in rows:
        if (a, f) > (b, g):
            inv = [0] * 4
            for i, c in enumerate(p):
                inv[int(c)] = i
            a, f, b, g, p = b, g, a, f, "".join(map(str, inv))
        out.append((a, f, b, g, p))
    return sorted(out)


def random_rows(rng, n, n_gluings):
    slots = [(t, f) for t in range(n) for f in range(4)]
    rng.shuffle(slots)
    rows = []
    for i in range(n_gluings):
        (a, f), (b, g) = slots[2 * i], slots[2 * i + 1]
        p = rng.choice([q for q in PERMS if int(q[f]) == g])
        rows.append((a, f, b, g, p))
    return canonical_rows(rows)


def connected(n, rows):
    seen, stack = {0}, [0]
    adj = {t: set() for t in range(n)}
    for a, _, b, _, _ in rows:
        adj[a].add(b)
        adj[b].add(a)
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def search_closed(rng, n, want, tries=200000):
    found, seen = [], set()
    for _ in range(tries):
        rows = random_rows(rng, n, 2 * n)
        key = tuple(rows)
        if key in seen or not connected(n, rows):
            continue
        seen.add(key)
        facts = skeleton_facts(n, rows)
        if facts["closed"] and facts["orientable"]:
            found.append(rows)
            if len(found) == want:
                break
    return found


def search_two_boundary(rng, max_tets=3, tries=100000):
    """Connected orientable manifold with two boundary components, some
    tetrahedron touching both."""
    for _ in range(tries):
        n = rng.randint(1, max_tets)
        rows = random_rows(rng, n, rng.randint(n - 1, 2 * n - 1))
        if not connected(n, rows):
            continue
        facts = skeleton_facts(n, rows)
        if facts["reversed_edge"] or not facts["orientable"] or len(facts["boundary_genera"]) < 2:
            continue
        if any(k == "other" for k in facts["link_types"]):
            continue
        return n, rows
    return None


def from_simplices(simplices):
    faces = {}
    for t, s in enumerate(simplices):
        for f in range(4):
            faces.setdefault(frozenset(s[i] for i in range(4) if i != f), []).append((t, f))
    rows = []
    for slots in faces.values():
        if len(slots) == 2:
            (a, f), (b, g) = slots
            perm = "".join(str(g) if i == f else str(list(simplices[b]).index(simplices[a][i])) for i in range(4))
            rows.append((a, f, b, g, perm))
    return canonical_rows(rows)


def thickened(triangles):
    """Surface x [0, 1]: each prism over (i<j<k) cut into three tetrahedra."""
    simplices = []
    for tri in triangles:
        i, j, k = sorted(tri)
        lo = lambda v: ("a", v)  # noqa: E731
        hi = lambda v: ("b", v)  # noqa: E731
        simplices += [
            (lo(i), lo(j), lo(k), hi(k)),
            (lo(i), lo(j), hi(j), hi(k)),
            (lo(i), hi(i), hi(j), hi(k)),
        ]
    return simplices


def main():
    rng = random.Random(20240611)
    CORPUS.mkdir(exist_ok=True)
    for old in CORPUS.glob("*"):
        old.unlink()
    entries = []

    def add(name, n, rows, kind, comment):
        facts = skeleton_facts(n, rows)
        (CORPUS / f"{name}.tri").write_text(tri_text(n, rows, comment))
        entries.append({"name": name, "file": f"{name}.tri", "kind": kind, "tetrahedra": n, "facts": facts})

    for n, want in ((1, 3), (2, 3), (3, 3)):
        for i, rows in enumerate(search_closed(rng, n, want)):
            add(f"closed_{n}tet_{i}", n, rows, "closed", f"closed orientable, found by seeded search ({n} tetrahedra)")
    add("closed_2tet_double", 2, [(0, f, 1, f, "0123") for f in range(4)], "closed", "double of a tetrahedron")
    five = [tuple(v for v in range(5) if v != skip) for skip in range(5)]
    add("closed_pentachoron", 5, from_simplices(five), "closed", "boundary of the 4-simplex")

    add("single_tet", 1, [], "bounded", "one tetrahedron, nothing glued")
    add(
        "two_tet_partial",
        2,
        canonical_rows([(0, 0, 1, 2, "2103"), (0, 1, 1, 1, "2103"), (0, 3, 1, 3, "1023")]),
        "bounded",
        "two tetrahedra, three gluings",
    )
    sphere = [tuple(v for v in range(4) if v != skip) for skip in range(4)]
    sxi = from_simplices(thickened(sphere))
    add("sphere_x_interval", len(thickened(sphere)), sxi, "bounded", "2-sphere times an interval")
    torus = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    txi = from_simplices(thickened(torus))
    add("torus_x_interval", len(thickened(torus)), txi, "bounded", "7-vertex torus times an interval")
    small = search_two_boundary(rng)
    if small is not None:
        add("two_boundary_small", small[0], small[1], "bounded", "two boundary components, found by seeded search")

    for rows in ([(0, 0, 0, 1, p)] for p in PERMS if p[0] == "1"):
        if skeleton_facts(1, rows)["reversed_edge"]:
            add("reversed_edge", 1, rows, "invalid", "an edge glued to itself in reverse")
            break

    k = 5
    arcs = [(i * k + j, i * k + j + 1) for i in range(k) for j in range(k - 1)]
    arcs += [(i * k + j, (i + 1) * k + j) for i in range(k - 1) for j in range(k)]
    (CORPUS / "grid5.gr").write_text(
        "c 5x5 grid\n" + f"p tw {k * k} {len(arcs)}\n" + "".join(f"{u + 1} {v + 1}\n" for u, v in arcs)
    )
    (CORPUS / "manifest.json").write_text(json.dumps({"triangulations": entries}, indent=2, sort_keys=True) + "\n")
    for e in entries:
        print(e["name"], e["tetrahedra"], e["facts"]["chi"], e["facts"]["boundary_genera"], e["facts"]["orientable"])


if __name__ == "__main__":
    main()

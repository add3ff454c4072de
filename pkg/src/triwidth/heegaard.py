"""Heegaard splittings as fork complexes, generalized splittings, amalgamation.

Compression bodies are tracked through the genera of their boundary
surfaces only.  A compression body ``C`` becomes a *fork*: the grip stands for
the upper boundary ``∂+C`` and each tine for one component of ``∂-C``.  A
handlebody is a fork without tines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Multigraph
from .trikernel import EDGES, Skeleton, Triangulation, analyze_skeleton, dual_graph


class SplittingError(ValueError):
    """Raised when a splitting cannot be built or amalgamated."""

    def __init__(self, message: str, violations: Sequence["Violation"] = ()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: tuple = ()

    def __str__(self) -> str:
        return self.message


# -- forks -----------------------------------------------------------------------


@dataclass(frozen=True)
class Fork:
    """``n_tines`` is stored separately from ``tine_genera`` so that a
    malformed fork can be represented and then rejected by validation."""

    id: str
    grip_genus: int
    tine_genera: tuple[int, ...] = ()
    n_tines: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "tine_genera", tuple(self.tine_genera))
        if self.n_tines is None:
            object.__setattr__(self, "n_tines", len(self.tine_genera))

    def min_grip_genus(self) -> int:
        """Smallest grip genus allowed by the tines.

        With ``n >= 1`` tines the grip must have genus at least
        ``sum(tines) - n + 1``; a handlebody only needs genus ``>= 0``.
        """
        if not self.tine_genera:
            return 0
        return max(0, sum(self.tine_genera) - len(self.tine_genera) + 1)

    def tree(self) -> Multigraph:
        """The fork as a tree: node 0 grip, 1 root, 2.. tines."""
        return Multigraph.from_arcs(self.n_tines + 2, [(0, 1)] + [(1, 2 + i) for i in range(self.n_tines)])

    def to_dict(self) -> dict:
        return {"grip_genus": self.grip_genus, "id": self.id, "tine_genera": list(self.tine_genera)}

    @classmethod
    def from_dict(cls, data: dict) -> "Fork":
        return cls(id=str(data["id"]), grip_genus=data["grip_genus"], tine_genera=tuple(data["tine_genera"]))


def _fork_problems(i: int, f: Fork) -> list[Violation]:
    out = []
    if f.n_tines != len(f.tine_genera):
        out.append(Violation("tine_count", f"fork {f.id}: {f.n_tines} tines declared, {len(f.tine_genera)} genera given", (i,)))
    if f.grip_genus < 0 or any(g < 0 for g in f.tine_genera):
        out.append(Violation("negative_genus", f"fork {f.id}: negative genus", (i,)))
    elif f.grip_genus < f.min_grip_genus():
        out.append(
            Violation(
                "compression_body",
                f"fork {f.id}: grip genus {f.grip_genus} below {f.min_grip_genus()} required by tines {list(f.tine_genera)}",
                (i,),
            )
        )
    return out


@dataclass(frozen=True)
class ForkComplex:
    forks: tuple[Fork, ...]
    grip_pairings: tuple[tuple[int, int], ...] = ()
    tine_pairings: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "forks", tuple(self.forks))
        object.__setattr__(self, "grip_pairings", tuple(tuple(p) for p in self.grip_pairings))
        object.__setattr__(
            self, "tine_pairings", tuple((tuple(a), tuple(b)) for a, b in self.tine_pairings)
        )

    @property
    def boundary(self) -> tuple[list[int], list[tuple[int, int]]]:
        """Unpaired grips (fork indices) and unpaired tines ((fork, tine) pairs)."""
        grips = {x for p in self.grip_pairings for x in p}
        tines = {x for p in self.tine_pairings for x in p}
        return (
            [i for i in range(len(self.forks)) if i not in grips],
            [(i, j) for i, f in enumerate(self.forks) for j in range(len(f.tine_genera)) if (i, j) not in tines],
        )

    def to_dict(self) -> dict:
        return {
            "forks": [f.to_dict() for f in self.forks],
            "grip_pairings": [list(p) for p in self.grip_pairings],
            "tine_pairings": [[list(a), list(b)] for a, b in self.tine_pairings],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "ForkComplex":
        return cls(
            forks=tuple(Fork.from_dict(f) for f in data["forks"]),
            grip_pairings=tuple(tuple(p) for p in data["grip_pairings"]),
            tine_pairings=tuple((tuple(a), tuple(b)) for a, b in data["tine_pairings"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "ForkComplex":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "forks") -> str:
        lines = [f"graph {name} {{"]
        for i, f in enumerate(self.forks):
            lines.append(f'  r{i} [shape=circle, label="{f.id}"];')
            lines.append(f'  g{i} [shape=square, label="{f.grip_genus}"];')
            lines.append(f"  r{i} -- g{i};")
            for j, genus in enumerate(f.tine_genera):
                lines.append(f'  t{i}_{j} [shape=triangle, label="{genus}"];')
                lines.append(f"  r{i} -- t{i}_{j};")
        for a, b in self.grip_pairings:
            lines.append(f"  g{a} -- g{b} [style=dashed];")
        for (a, x), (b, y) in self.tine_pairings:
            lines.append(f"  t{a}_{x} -- t{b}_{y} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def validate_fork_complex(fc: ForkComplex) -> tuple[bool, list[Violation]]:
    out: list[Violation] = []
    for i, f in enumerate(fc.forks):
        out.extend(_fork_problems(i, f))
    used_grips: set[int] = set()
    for a, b in fc.grip_pairings:
        if not (0 <= a < len(fc.forks) and 0 <= b < len(fc.forks)):
            out.append(Violation("bad_index", f"grip pairing {a}-{b} names a missing fork", (a, b)))
            continue
        if a == b:
            out.append(Violation("self_pairing", f"grip of fork {fc.forks[a].id} paired with itself", (a, b)))
        for x in (a, b):
            if x in used_grips:
                out.append(Violation("reused", f"grip of fork {fc.forks[x].id} is paired twice", (x,)))
            used_grips.add(x)
        ga, gb = fc.forks[a].grip_genus, fc.forks[b].grip_genus
        if ga != gb:
            out.append(Violation("genus_mismatch", f"grips of {fc.forks[a].id} and {fc.forks[b].id} have genera {ga} and {gb}", (a, b)))
    used_tines: set[tuple[int, int]] = set()
    for s, t in fc.tine_pairings:
        genera = []
        for fork, tine in (s, t):
            if not (0 <= fork < len(fc.forks) and 0 <= tine < len(fc.forks[fork].tine_genera)):
                out.append(Violation("bad_index", f"tine pairing names missing tine {(fork, tine)}", (fork, tine)))
                break
            if (fork, tine) in used_tines:
                out.append(Violation("reused", f"tine {tine} of fork {fc.forks[fork].id} is paired twice", (fork, tine)))
            used_tines.add((fork, tine))
            genera.append(fc.forks[fork].tine_genera[tine])
        else:
            if s == t:
                out.append(Violation("self_pairing", f"tine {s} paired with itself", s))
            if genera[0] != genera[1]:
                out.append(Violation("genus_mismatch", f"tines {s} and {t} have genera {genera[0]} and {genera[1]}", (s, t)))
    return not out, out


# -- decompositions and generalized splittings ----------------------------------


@dataclass(frozen=True)
class Piece:
    """A piece of a decomposition: its boundary surfaces ("slots") by genus."""

    id: str
    slot_genera: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "slot_genera", tuple(self.slot_genera))


Slot = tuple[int, int]  # (piece index, slot index)


@dataclass(frozen=True)
class Decomposition:
    pieces: tuple[Piece, ...]
    gluings: tuple[tuple[Slot, Slot], ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "gluings", tuple((tuple(a), tuple(b)) for a, b in self.gluings))

    @property
    def dual_graph(self) -> Multigraph:
        return Multigraph.from_arcs(len(self.pieces), [(a[0], b[0]) for a, b in self.gluings])

    def gluing_genus(self, gluing: tuple[Slot, Slot]) -> int:
        (p, s), _ = gluing
        return self.pieces[p].slot_genera[s]

    def partner(self) -> dict[Slot, Slot]:
        out = {}
        for a, b in self.gluings:
            out[a] = b
            out[b] = a
        return out

    def problems(self) -> list[Violation]:
        out = []
        used: set[Slot] = set()
        for a, b in self.gluings:
            for p, s in (a, b):
                if not (0 <= p < len(self.pieces) and 0 <= s < len(self.pieces[p].slot_genera)):
                    out.append(Violation("bad_index", f"gluing names missing slot {(p, s)}", (p, s)))
                    break
                if (p, s) in used:
                    out.append(Violation("reused", f"slot {s} of piece {self.pieces[p].id} glued twice", (p, s)))
                used.add((p, s))
            else:
                if a == b:
                    out.append(Violation("self_pairing", f"slot {a} glued to itself", a))
                ga = self.pieces[a[0]].slot_genera[a[1]]
                gb = self.pieces[b[0]].slot_genera[b[1]]
                if ga != gb:
                    out.append(Violation("genus_mismatch", f"slots {a} and {b} have genera {ga} and {gb}", (a, b)))
        return out


@dataclass(frozen=True)
class GeneralizedSplitting:
    """A decomposition with an ordering and a compatible splitting per piece.

    ``ordering[i]`` is the position (1-based) of piece ``i``;
    ``sides[i][s]`` puts slot ``s`` of piece ``i`` in ``∂1`` (1) or ``∂2`` (2);
    ``splitting_genera[i]`` is the genus of the splitting surface of piece ``i``.
    The first compression body of piece ``i`` has lower boundary ``∂1``, the
    second ``∂2``.
    """

    decomposition: Decomposition
    ordering: tuple[int, ...]
    sides: tuple[tuple[int, ...], ...]
    splitting_genera: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ordering", tuple(self.ordering))
        object.__setattr__(self, "sides", tuple(tuple(s) for s in self.sides))
        object.__setattr__(self, "splitting_genera", tuple(self.splitting_genera))

    def forks(self, i: int) -> tuple[Fork, Fork]:
        piece = self.decomposition.pieces[i]
        g = self.splitting_genera[i]
        first = tuple(gen for gen, side in zip(piece.slot_genera, self.sides[i]) if side == 1)
        second = tuple(gen for gen, side in zip(piece.slot_genera, self.sides[i]) if side == 2)
        return Fork(f"{piece.id}.1", g, first), Fork(f"{piece.id}.2", g, second)

    def to_dict(self) -> dict:
        return {
            "gluings": [[list(a), list(b)] for a, b in self.decomposition.gluings],
            "ordering": list(self.ordering),
            "pieces": [
                {"id": p.id, "sides": list(side), "slot_genera": list(p.slot_genera), "splitting_genus": g}
                for p, side, g in zip(self.decomposition.pieces, self.sides, self.splitting_genera)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "GeneralizedSplitting":
        pieces = tuple(Piece(str(p["id"]), tuple(p["slot_genera"])) for p in data["pieces"])
        gluings = tuple((tuple(a), tuple(b)) for a, b in data["gluings"])
        return cls(
            decomposition=Decomposition(pieces, gluings),
            ordering=tuple(data["ordering"]),
            sides=tuple(tuple(p["sides"]) for p in data["pieces"]),
            splitting_genera=tuple(p["splitting_genus"] for p in data["pieces"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "GeneralizedSplitting":
        return cls.from_dict(json.loads(text))


def compatible_sides(d: Decomposition, ordering: Sequence[int], free_side: int = 2) -> tuple[tuple[int, ...], ...]:
    """The boundary partition forced by ``ordering``: slots glued to earlier
    pieces go to side 1, to later pieces side 2; unglued slots get ``free_side``."""
    partner = d.partner()
    out = []
    for i, piece in enumerate(d.pieces):
        row = []
        for s in range(len(piece.slot_genera)):
            other = partner.get((i, s))
            if other is None:
                row.append(free_side)
            else:
                row.append(1 if ordering[other[0]] < ordering[i] else 2)
        out.append(tuple(row))
    return tuple(out)


def validate_generalized(gs: GeneralizedSplitting) -> tuple[bool, list[Violation]]:
    d = gs.decomposition
    out = d.problems()
    n = len(d.pieces)
    if sorted(gs.ordering) != list(range(1, n + 1)):
        out.append(Violation("ordering", f"ordering {list(gs.ordering)} is not a bijection onto 1..{n}"))
        return False, out
    if len(gs.sides) != n or len(gs.splitting_genera) != n:
        out.append(Violation("shape", "sides and splitting genera need one entry per piece"))
        return False, out
    for i, piece in enumerate(d.pieces):
        if len(gs.sides[i]) != len(piece.slot_genera) or any(s not in (1, 2) for s in gs.sides[i]):
            out.append(Violation("shape", f"piece {piece.id}: one side label 1 or 2 per slot required", (i,)))
    if out:
        return False, out
    for a, b in d.gluings:
        if a[0] == b[0]:
            out.append(Violation("self_gluing", f"piece {d.pieces[a[0]].id} is glued to itself; no ordering separates the two sides", (a, b)))
            continue
        for (p, s), (q, _) in ((a, b), (b, a)):
            want = 1 if gs.ordering[q] < gs.ordering[p] else 2
            if gs.sides[p][s] != want:
                out.append(
                    Violation(
                        "incompatible",
                        f"gluing {a}-{b}: slot {s} of piece {d.pieces[p].id} is on side {gs.sides[p][s]}, "
                        f"but piece {d.pieces[q].id} comes {'earlier' if want == 1 else 'later'}",
                        (a, b),
                    )
                )
    for i in range(n):
        for k, fork in enumerate(gs.forks(i)):
            for v in _fork_problems(2 * i + k, fork):
                out.append(Violation(v.code, f"piece {d.pieces[i].id}: {v.message}", (i,)))
    return not out, out


def to_fork_complex(gs: GeneralizedSplitting) -> ForkComplex:
    d = gs.decomposition
    forks: list[Fork] = []
    tine_of: dict[Slot, tuple[int, int]] = {}
    for i, piece in enumerate(d.pieces):
        for k, fork in enumerate(gs.forks(i)):
            side = k + 1
            slots = [s for s in range(len(piece.slot_genera)) if gs.sides[i][s] == side]
            for j, s in enumerate(slots):
                tine_of[(i, s)] = (len(forks), j)
            forks.append(fork)
    grips = tuple((2 * i, 2 * i + 1) for i in range(len(d.pieces)))
    tines = tuple((tine_of[a], tine_of[b]) for a, b in d.gluings)
    return ForkComplex(tuple(forks), grips, tines)


@dataclass(frozen=True)
class GenusLedger:
    sum_splitting_genera: int
    sum_gluing_genera: int
    euler_char_dual: int
    amalgamated_genus: int

    def __post_init__(self):
        expected = self.sum_splitting_genera - self.sum_gluing_genera + 1 - self.euler_char_dual
        if self.amalgamated_genus != expected:
            raise ValueError("ledger does not balance")

    def to_dict(self) -> dict:
        return {
            "amalgamated_genus": self.amalgamated_genus,
            "euler_char_dual": self.euler_char_dual,
            "sum_gluing_genera": self.sum_gluing_genera,
            "sum_splitting_genera": self.sum_splitting_genera,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def amalgamate(gs: GeneralizedSplitting) -> GenusLedger:
    """Genus of the classical splitting obtained by amalgamating ``gs``:
    the splitting genera, minus the gluing-surface genera, plus ``1 - χ``
    of the decomposition's dual graph."""
    ok, problems = validate_generalized(gs)
    if not ok:
        raise SplittingError("generalized splitting is not valid: " + "; ".join(map(str, problems)), problems)
    d = gs.decomposition
    graph = d.dual_graph
    if not graph.is_connected():
        raise SplittingError("the decomposition's dual graph is disconnected; amalgamate each part separately")
    s = sum(gs.splitting_genera)
    r = sum(d.gluing_genus(gl) for gl in d.gluings)
    chi = graph.euler_characteristic()
    return GenusLedger(s, r, chi, s - r + 1 - chi)


def two_piece_genus(g1: int, g2: int, glued: int) -> int:
    """Amalgamating two splittings across one connected surface."""
    return g1 + g2 - glued


def thick_thin_splitting(thick_genus: int, m_thin: int) -> GeneralizedSplitting:
    """Star-shaped splitting: a thick piece glued along tori to ``m_thin`` solid tori.

    The thick piece comes first; its second compression body has the ``m``
    tori as lower boundary.  Each solid torus then sees its torus on side 1 and
    splits as ``T² × I`` (first body) plus a solid torus (second body), with a
    torus as splitting surface.
    """
    if m_thin < 0 or thick_genus < 0:
        raise SplittingError("genus and thin-piece count must be non-negative")
    pieces = [Piece("thick", (1,) * m_thin)] + [Piece(f"thin{i + 1}", (1,)) for i in range(m_thin)]
    gluings = tuple(((0, i), (i + 1, 0)) for i in range(m_thin))
    d = Decomposition(tuple(pieces), gluings)
    ordering = tuple(range(1, m_thin + 2))
    gs = GeneralizedSplitting(d, ordering, compatible_sides(d, ordering), (thick_genus,) + (1,) * m_thin)
    ok, problems = validate_generalized(gs)
    if not ok:
        raise SplittingError("inconsistent genera: " + "; ".join(map(str, problems)), problems)
    return gs


# -- splittings from triangulations --------------------------------------------


def splitting_from_closed_triangulation(t: Triangulation) -> tuple[ForkComplex, int]:
    """Handlebody splitting from the thickened 1-skeleton and its complement.

    The complement deformation-retracts onto the dual graph, so its genus is
    the dual graph's first Betti number ``n + 1``; the 1-skeleton side gives
    ``E - V + 1``.  The two must agree.
    """
    report = analyze_skeleton(t)
    if not report.closed:
        raise SplittingError("triangulation is not a closed 3-manifold")
    graph = dual_graph(t)
    if not graph.is_connected():
        raise SplittingError("dual graph is disconnected")
    genus = graph.betti_number()
    skeleton_genus = report.edge_classes - report.vertex_classes + 1
    if genus != skeleton_genus:
        raise SplittingError(f"genus mismatch: dual graph gives {genus}, 1-skeleton gives {skeleton_genus}")
    fc = ForkComplex((Fork("skeleton", genus), Fork("dual", genus)), ((0, 1),))
    return fc, genus


def _chains(top: int) -> list[tuple[int, ...]]:
    """Strictly increasing chains of non-empty subsets of ``top`` ending in it."""
    subs = [m for m in range(1, top) if m & top == m]
    out = [(top,)]
    for m in subs:
        for ch in _chains(m):
            out.append(ch + (top,))
    return out


_TET_CHAINS = _chains(0b1111)
_FACE_CHAINS = {f: _chains(0b1111 & ~(1 << f)) for f in range(4)}


@dataclass(frozen=True)
class SplittingSide:
    """The complex a compression body thickens, in the first derived subdivision."""

    euler_characteristic: int
    components: int
    lower_boundary_euler: int
    lower_boundary_genera: tuple[int, ...]

    @property
    def genus(self) -> int:
        # joining the components by arcs lowers χ by components - 1
        twice = 2 * (self.components - self.euler_characteristic) + self.lower_boundary_euler
        if twice % 2:
            raise SplittingError("odd Euler characteristic on the lower boundary")
        return twice // 2


class _UF:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        self.add(x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)

    def count(self) -> int:
        return len({self.find(x) for x in self.parent})


def derived_cell_counts(t: Triangulation, keep=None) -> tuple[int, int, int, int]:
    """Simplex counts of the first barycentric subdivision, by dimension.

    Each derived simplex is a chain of cells of ``t``; it is counted once, via
    a representative tetrahedron of its top cell.  ``keep(tet, chain)``
    optionally filters chains (given as bitmasks of local vertices).
    """
    sk = Skeleton(t)
    counts = [0, 0, 0, 0]

    def visit(tet, chains):
        for ch in chains:
            if keep is None or keep(tet, ch):
                counts[len(ch) - 1] += 1

    first_face, first_edge, first_vertex = {}, {}, {}
    for tet in range(t.n_tetrahedra):
        visit(tet, _TET_CHAINS)
        for f in range(4):
            first_face.setdefault(sk.triangle_of[4 * tet + f], (tet, f))
        for e, (a, b) in enumerate(EDGES):
            first_edge.setdefault(sk.edge_of[6 * tet + e], (tet, (1 << a) | (1 << b)))
        for v in range(4):
            first_vertex.setdefault(sk.vertex_of[4 * tet + v], (tet, 1 << v))
    for tet, f in first_face.values():
        visit(tet, _FACE_CHAINS[f])
    for tet, mask in first_edge.values():
        visit(tet, _chains(mask))
    for tet, mask in first_vertex.values():
        visit(tet, [(mask,)])
    return tuple(counts)


def _boundary_cells(sk: Skeleton, ids: Iterable[int]) -> tuple[set, set, set]:
    verts, edges, faces = set(), set(), set()
    for c in ids:
        comp = sk.boundary_components[c]
        verts |= comp.vertex_classes
        edges |= comp.edge_classes
        faces |= {sk.triangle_of[4 * tet + f] for tet, f in comp.faces}
    return verts, edges, faces


def splitting_sides(t: Triangulation, first: Sequence[int], second: Sequence[int]) -> tuple[SplittingSide, SplittingSide]:
    """Both complexes of the splitting compatible with boundary partition
    (``first``, ``second``), given as boundary component ids of ``t``."""
    sk = Skeleton(t)
    n_comp = len(sk.boundary_components)
    first, second = sorted(set(first)), sorted(set(second))
    if set(first) & set(second) or sorted(first + second) != list(range(n_comp)):
        raise SplittingError(
            f"partition {first} / {second} must split the boundary components 0..{n_comp - 1}"
        )
    if sk.reversed_edges or any(kind == "other" for kind in sk.link_types):
        raise SplittingError("triangulation is not a 3-manifold: some vertex link is neither a sphere nor a disk, or an edge is reversed")
    crowded = [tet for tet in range(t.n_tetrahedra) if len(sk.tetrahedron_boundary_components(tet)) > 1]
    if crowded:
        raise SplittingError(
            f"tetrahedron {crowded[0]} meets more than one boundary component; "
            "apply boundary_isolation_subdivision first"
        )
    v1, e1, _ = _boundary_cells(sk, first)
    v2, e2, _ = _boundary_cells(sk, second)
    comp_of_vertex = sk.boundary_vertex_component()

    # side 1: ∂1 plus the derived 1-skeleton away from ∂2
    chi1 = sum(sk.boundary_components[c].euler_characteristic for c in first)
    uf1 = _UF()
    for c in first:
        uf1.add(("b", c))
    extra_v = extra_e = 0
    for v in range(sk.n_vertices):
        if v not in v1 and v not in v2:
            extra_v += 1
            uf1.add(("v", v))
    seen_edges = set()
    for tet in range(t.n_tetrahedra):
        for e, (a, b) in enumerate(EDGES):
            cls = sk.edge_of[6 * tet + e]
            if cls in seen_edges:
                continue
            seen_edges.add(cls)
            if cls in e1 or cls in e2:
                continue
            extra_v += 1
            uf1.add(("e", cls))
            for end in (a, b):
                vc = sk.vertex_of[4 * tet + end]
                if vc in v2:
                    continue
                extra_e += 1
                uf1.union(("e", cls), ("b", comp_of_vertex[vc]) if vc in v1 else ("v", vc))
    if not uf1.parent:
        raise SplittingError("the first side is empty; subdivide the triangulation first")
    s1 = SplittingSide(
        euler_characteristic=chi1 + extra_v - extra_e,
        components=uf1.count(),
        lower_boundary_euler=chi1,
        lower_boundary_genera=tuple(sk.boundary_components[c].genus for c in first),
    )

    # side 2: closed star of ∂2 plus the derived dual graph
    def touches(tet: int, mask: int) -> bool:
        return any(mask >> x & 1 and sk.vertex_of[4 * tet + x] in v2 for x in range(4))

    star = derived_cell_counts(t, keep=lambda tet, ch: touches(tet, ch[0]))
    dual_v = dual_e = 0
    uf2 = _UF()
    for c in second:
        uf2.add(("b", c))
    for tet in range(t.n_tetrahedra):
        uf2.add(("t", tet))
        if touches(tet, 0b1111):
            # the barycentre is already in the star
            uf2.union(("t", tet), ("b", _component_touching(sk, tet, comp_of_vertex, v2)))
        else:
            dual_v += 1
        for f in range(4):
            if not t.is_glued(tet, f):
                continue
            face = 0b1111 & ~(1 << f)
            uf2.union(("t", tet), ("f", sk.triangle_of[4 * tet + f]))
            if not touches(tet, face):
                dual_e += 1
    for g in t.gluings:
        face = 0b1111 & ~(1 << g.src_face)
        if not touches(g.src_tet, face):
            dual_v += 1
    chi2 = sum(sk.boundary_components[c].euler_characteristic for c in second)
    s2 = SplittingSide(
        euler_characteristic=star[0] + dual_v - star[1] - dual_e + star[2] - star[3],
        components=uf2.count(),
        lower_boundary_euler=chi2,
        lower_boundary_genera=tuple(sk.boundary_components[c].genus for c in second),
    )
    return s1, s2


def _component_touching(sk: Skeleton, tet: int, comp_of_vertex: dict, v2: set) -> int:
    for x in range(4):
        vc = sk.vertex_of[4 * tet + x]
        if vc in v2:
            return comp_of_vertex[vc]
    raise AssertionError("tetrahedron does not touch the second boundary")


def splitting_from_boundary_triangulation(
    t: Triangulation, first: Sequence[int], second: Sequence[int]
) -> tuple[ForkComplex, int]:
    """Splitting compatible with the boundary partition (``first``, ``second``).

    Each side's genus comes from Euler characteristics: a compression body
    thickening a connected complex ``Γ`` with lower boundary ``∂-`` has an
    upper boundary of genus ``1 - χ(Γ) + χ(∂-)/2``.  Both sides are computed
    independently and must agree.
    """
    s1, s2 = splitting_sides(t, first, second)
    if s1.genus != s2.genus:
        raise SplittingError(f"genus mismatch between the two sides: {s1.genus} vs {s2.genus}")
    forks = (Fork("first", s1.genus, s1.lower_boundary_genera), Fork("second", s2.genus, s2.lower_boundary_genera))
    return ForkComplex(forks, ((0, 1),)), s1.genus

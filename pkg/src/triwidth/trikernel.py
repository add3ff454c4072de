"""Triangulations of 3-manifolds built from tetrahedra and face gluings.

Conventions
-----------
Tetrahedra are numbered ``0..n-1`` and their vertices ``0..3``.  Face ``f``
of a tetrahedron is the triangle *opposite* vertex ``f``.  A gluing
``(a, f) -> (b, g)`` carries a permutation ``p`` of ``{0,1,2,3}`` sending
vertex ``i`` of tetrahedron ``a`` to vertex ``p[i]`` of tetrahedron ``b``;
necessarily ``p[f] == g``.

Gluings are stored with the lexicographically smaller ``(tet, face)`` as the
source, so two descriptions of the same quotient space compare equal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .graph import Multigraph

#: local edges of a tetrahedron, indexed 0..5
EDGES: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {e: i for i, e in enumerate(EDGES)}
EDGE_INDEX.update({(b, a): i for (a, b), i in list(EDGE_INDEX.items())})

#: orderings of the four vertices; the sub-tetrahedra of a barycentric subdivision
FLAGS: tuple[tuple[int, int, int, int], ...] = tuple(permutations(range(4)))
FLAG_INDEX = {s: i for i, s in enumerate(FLAGS)}


class TriangulationError(ValueError):
    """Invalid gluing data."""


class ParseError(TriangulationError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True, order=True)
class VertexPerm:
    """A permutation of the tetrahedron vertex labels ``0..3``."""

    image: tuple[int, int, int, int]

    def __post_init__(self):
        image = tuple(int(i) for i in self.image)
        if sorted(image) != [0, 1, 2, 3]:
            raise TriangulationError(f"{self.image!r} is not a permutation of 0123")
        object.__setattr__(self, "image", image)

    @classmethod
    def parse(cls, text: str) -> "VertexPerm":
        if not re.fullmatch(r"[0-3]{4}", text):
            raise TriangulationError(f"bad permutation {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls) -> "VertexPerm":
        return cls((0, 1, 2, 3))

    def __getitem__(self, i: int) -> int:
        return self.image[i]

    def __str__(self) -> str:
        return "".join(map(str, self.image))

    def inverse(self) -> "VertexPerm":
        inv = [0] * 4
        for i, j in enumerate(self.image):
            inv[j] = i
        return VertexPerm(tuple(inv))

    def compose(self, other: "VertexPerm") -> "VertexPerm":
        """``self ∘ other``: apply ``other`` first."""
        return VertexPerm(tuple(self.image[other.image[i]] for i in range(4)))

    def sign(self) -> int:
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if self.image[i] > self.image[j]
        )
        return -1 if inversions % 2 else 1


@dataclass(frozen=True, order=True)
class FaceGluing:
    src_tet: int
    src_face: int
    dst_tet: int
    dst_face: int
    perm: VertexPerm

    def __post_init__(self):
        for face in (self.src_face, self.dst_face):
            if face not in (0, 1, 2, 3):
                raise TriangulationError(f"face label {face} not in 0..3")
        if self.src_tet < 0 or self.dst_tet < 0:
            raise TriangulationError("negative tetrahedron index")
        if self.perm[self.src_face] != self.dst_face:
            raise TriangulationError(
                f"permutation {self.perm} sends face {self.src_face} to "
                f"{self.perm[self.src_face]}, not {self.dst_face}"
            )
        if (self.src_tet, self.src_face) == (self.dst_tet, self.dst_face):
            raise TriangulationError(
                f"face {self.src_face} of tetrahedron {self.src_tet} glued to itself"
            )

    @property
    def src(self) -> tuple[int, int]:
        return (self.src_tet, self.src_face)

    @property
    def dst(self) -> tuple[int, int]:
        return (self.dst_tet, self.dst_face)

    def reversed(self) -> "FaceGluing":
        return FaceGluing(self.dst_tet, self.dst_face, self.src_tet, self.src_face, self.perm.inverse())

    def canonical(self) -> "FaceGluing":
        return self if self.src <= self.dst else self.reversed()

    def __str__(self) -> str:
        return f"{self.src_tet} {self.src_face} -> {self.dst_tet} {self.dst_face} {self.perm}"


@dataclass(frozen=True)
class Triangulation:
    """``n_tetrahedra`` tetrahedra and a set of face gluings.

    Construct through :meth:`build` (or :func:`parse_triangulation`), which
    canonicalizes and validates the gluing set.
    """

    n_tetrahedra: int
    gluings: tuple[FaceGluing, ...] = field(default=())

    @classmethod
    def build(cls, n_tetrahedra: int, gluings: Iterable[FaceGluing]) -> "Triangulation":
        if n_tetrahedra < 1:
            raise TriangulationError("a triangulation needs at least one tetrahedron")
        used: dict[tuple[int, int], FaceGluing] = {}
        canon = []
        for g in gluings:
            g = g.canonical()
            for tet in (g.src_tet, g.dst_tet):
                if tet >= n_tetrahedra:
                    raise TriangulationError(f"tetrahedron {tet} out of range 0..{n_tetrahedra - 1}")
            for slot in (g.src, g.dst):
                if slot in used:
                    raise TriangulationError(
                        f"face {slot[1]} of tetrahedron {slot[0]} is used by more than one gluing"
                    )
                used[slot] = g
            canon.append(g)
        return cls(n_tetrahedra, tuple(sorted(canon)))

    @classmethod
    def from_tuples(cls, n_tetrahedra: int, rows: Iterable[Sequence]) -> "Triangulation":
        """Build from ``(src_tet, src_face, dst_tet, dst_face, "perm")`` rows."""
        gl = []
        for a, f, b, g, p in rows:
            perm = p if isinstance(p, VertexPerm) else VertexPerm.parse(str(p))
            gl.append(FaceGluing(a, f, b, g, perm))
        return cls.build(n_tetrahedra, gl)

    @classmethod
    def from_simplices(cls, simplices: Sequence[Sequence]) -> "Triangulation":
        """Glue labelled tetrahedra along faces carrying the same three labels.

        Each simplex is four distinct vertex labels; the result is the
        simplicial complex they span.  Convenient for building test inputs.
        """
        faces: dict[frozenset, list[tuple[int, int]]] = {}
        for t, simplex in enumerate(simplices):
            if len(set(simplex)) != 4:
                raise TriangulationError(f"simplex {t} does not have four distinct labels")
            for f in range(4):
                key = frozenset(simplex[i] for i in range(4) if i != f)
                faces.setdefault(key, []).append((t, f))
        gl = []
        for key, slots in faces.items():
            if len(slots) > 2:
                raise TriangulationError(f"triangle {sorted(key)} lies in more than two tetrahedra")
            if len(slots) == 2:
                (a, f), (b, g) = slots
                src, dst = simplices[a], simplices[b]
                image = [0] * 4
                for i in range(4):
                    image[i] = g if i == f else list(dst).index(src[i])
                gl.append(FaceGluing(a, f, b, g, VertexPerm(tuple(image))))
        return cls.build(len(simplices), gl)

    @cached_property
    def partner(self) -> dict[tuple[int, int], tuple[int, int, VertexPerm]]:
        """``(tet, face) -> (other tet, other face, perm)`` in both directions."""
        out = {}
        for g in self.gluings:
            out[g.src] = (g.dst_tet, g.dst_face, g.perm)
            out[g.dst] = (g.src_tet, g.src_face, g.perm.inverse())
        return out

    def is_glued(self, tet: int, face: int) -> bool:
        return (tet, face) in self.partner

    def serialize(self) -> str:
        return serialize_triangulation(self)


# -- file format -------------------------------------------------------------

_TOKEN_RULES = (
    (re.compile(r"\d+"), "tetrahedron index"),
    (re.compile(r"[0-3]"), "face label"),
    (re.compile(r"->"), "'->'"),
    (re.compile(r"\d+"), "tetrahedron index"),
    (re.compile(r"[0-3]"), "face label"),
    (re.compile(r"[0-3]{4}"), "permutation"),
)


def _tokens(line: str) -> list[tuple[int, str]]:
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def parse_triangulation(text: str) -> Triangulation:
    """Parse the line-oriented triangulation format.

    >>> t = parse_triangulation("tets 2\\n0 0 -> 1 0 0123\\n")
    >>> t.n_tetrahedra, len(t.gluings)
    (2, 1)
    """
    n = None
    gluings = []
    slots: dict[tuple[int, int], int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        toks = _tokens(line)
        if n is None:
            if len(toks) != 2 or toks[0][1] != "tets":
                raise ParseError("expected header 'tets <n>'", lineno, toks[0][0])
            if not re.fullmatch(r"\d+", toks[1][1]):
                raise ParseError("tetrahedron count must be a decimal integer", lineno, toks[1][0])
            n = int(toks[1][1])
            if n < 1:
                raise ParseError("tetrahedron count must be at least 1", lineno, toks[1][0])
            continue
        if len(toks) != 6:
            col = toks[min(len(toks), 6) - 1][0] if len(toks) > 6 else len(line) + 1
            if len(toks) > 6:
                col = toks[6][0]
            raise ParseError("expected '<tet> <face> -> <tet> <face> <perm>'", lineno, col)
        for (col, tok), (rx, what) in zip(toks, _TOKEN_RULES):
            if not rx.fullmatch(tok):
                raise ParseError(f"expected {what}, found {tok!r}", lineno, col)
        a, f, _, b, g, p = (tok for _, tok in toks)
        a, f, b, g = int(a), int(f), int(b), int(g)
        for tet, col in ((a, toks[0][0]), (b, toks[3][0])):
            if tet >= n:
                raise ParseError(f"tetrahedron {tet} out of range 0..{n - 1}", lineno, col)
        for slot, col in (((a, f), toks[0][0]), ((b, g), toks[3][0])):
            if slot in slots:
                raise ParseError(
                    f"face {slot[1]} of tetrahedron {slot[0]} already glued on line {slots[slot]}",
                    lineno,
                    col,
                )
        try:
            gl = FaceGluing(a, f, b, g, VertexPerm.parse(p))
        except TriangulationError as exc:
            raise ParseError(str(exc), lineno, toks[5][0] if "permutation" in str(exc) else toks[0][0]) from None
        slots[(a, f)] = slots[(b, g)] = lineno
        gluings.append(gl)
    if n is None:
        raise ParseError("empty input: missing 'tets <n>' header", 1, 1)
    return Triangulation.build(n, gluings)


def serialize_triangulation(t: Triangulation) -> str:
    lines = [f"tets {t.n_tetrahedra}"] + [str(g) for g in t.gluings]
    return "\n".join(lines) + "\n"


# -- skeleton ----------------------------------------------------------------


class _ParityDSU:
    """Union-find tracking the parity of each element relative to its root."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n

    def find(self, x: int) -> tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root, acc = x, 0
        for y in reversed(path):
            acc ^= self.parity[y]
            self.parity[y] = acc
            self.parent[y] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, a: int, b: int, odd: int) -> bool:
        """Join ``a`` and ``b`` with relative parity ``odd``; False on a clash."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == odd
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ odd
        return True


def _classes(roots: list[int]) -> tuple[list[int], int]:
    """Renumber union-find roots densely in order of first appearance."""
    ids: dict[int, int] = {}
    out = []
    for r in roots:
        out.append(ids.setdefault(r, len(ids)))
    return out, len(ids)


@dataclass(frozen=True)
class BoundaryComponent:
    id: int
    genus: int
    triangles: int
    euler_characteristic: int
    faces: tuple[tuple[int, int], ...]
    vertex_classes: frozenset
    edge_classes: frozenset


class Skeleton:
    """Simplex classes of a triangulation and the data derived from them.

    ``vertex_of[4*t + v]``, ``edge_of[6*t + e]`` and ``triangle_of[4*t + f]``
    give the class of each local simplex.
    """

    def __init__(self, t: Triangulation):
        self.triangulation = t
        n = t.n_tetrahedra
        partner = t.partner

        vdsu = _ParityDSU(4 * n)
        edsu = _ParityDSU(6 * n)
        reversed_roots = set()
        for g in t.gluings:
            a, f, b, p = g.src_tet, g.src_face, g.dst_tet, g.perm
            for v in range(4):
                if v != f:
                    vdsu.union(4 * a + v, 4 * b + p[v], 0)
            for (x, y), e in zip(EDGES, range(6)):
                if f in (x, y):
                    continue
                px, py = p[x], p[y]
                if not edsu.union(6 * a + e, 6 * b + EDGE_INDEX[(px, py)], int(px > py)):
                    reversed_roots.add(edsu.find(6 * a + e)[0])

        self.vertex_of, self.n_vertices = _classes([vdsu.find(i)[0] for i in range(4 * n)])
        edge_roots = [edsu.find(i)[0] for i in range(6 * n)]
        self.edge_of, self.n_edges = _classes(edge_roots)
        reversed_roots = {edsu.find(r)[0] for r in reversed_roots}
        self.reversed_edges = frozenset(
            self.edge_of[i] for i in range(6 * n) if edge_roots[i] in reversed_roots
        )

        tri = [-1] * (4 * n)
        count = 0
        for tet in range(n):
            for f in range(4):
                if tri[4 * tet + f] >= 0:
                    continue
                tri[4 * tet + f] = count
                other = partner.get((tet, f))
                if other is not None:
                    tri[4 * other[0] + other[1]] = count
                count += 1
        self.triangle_of, self.n_triangles = tri, count

        self._link_data()
        self._boundary_data()
        self._orientation()

    # vertex links: one triangle per tetrahedron corner
    def _link_data(self):
        t = self.triangulation
        n = t.n_tetrahedra
        dsu = _ParityDSU(16 * n)  # link vertex (tet, v, w) lives at 16*tet + 4*v + w
        glued_link_edges = [0] * self.n_vertices
        open_link = [False] * self.n_vertices
        corners = [0] * self.n_vertices
        for tet in range(n):
            for v in range(4):
                corners[self.vertex_of[4 * tet + v]] += 1
                if any(not t.is_glued(tet, f) for f in range(4) if f != v):
                    open_link[self.vertex_of[4 * tet + v]] = True
        for g in t.gluings:
            a, f, b, p = g.src_tet, g.src_face, g.dst_tet, g.perm
            for v in range(4):
                if v == f:
                    continue
                glued_link_edges[self.vertex_of[4 * a + v]] += 1
                for w in range(4):
                    if w not in (v, f):
                        dsu.union(16 * a + 4 * v + w, 16 * b + 4 * p[v] + p[w], 0)
        link_vertices = [set() for _ in range(self.n_vertices)]
        for tet in range(n):
            for v in range(4):
                cls = self.vertex_of[4 * tet + v]
                for w in range(4):
                    if w != v:
                        link_vertices[cls].add(dsu.find(16 * tet + 4 * v + w)[0])
        self.link_euler = []
        self.link_closed = []
        self.link_types = []
        for c in range(self.n_vertices):
            faces = corners[c]
            chi = len(link_vertices[c]) - (3 * faces - glued_link_edges[c]) + faces
            closed = not open_link[c]
            self.link_euler.append(chi)
            self.link_closed.append(closed)
            if closed and chi == 2:
                self.link_types.append("sphere")
            elif not closed and chi == 1:
                self.link_types.append("disk")
            else:
                self.link_types.append("other")

    def _boundary_data(self):
        t = self.triangulation
        faces = [(tet, f) for tet in range(t.n_tetrahedra) for f in range(4) if not t.is_glued(tet, f)]
        self.boundary_faces = faces
        index = {face: i for i, face in enumerate(faces)}
        dsu = _ParityDSU(len(faces))
        by_edge: dict[int, int] = {}
        for i, (tet, f) in enumerate(faces):
            for e, (x, y) in enumerate(EDGES):
                if f in (x, y):
                    continue
                cls = self.edge_of[6 * tet + e]
                if cls in by_edge:
                    dsu.union(by_edge[cls], i, 0)
                else:
                    by_edge[cls] = i
        groups: dict[int, list[tuple[int, int]]] = {}
        for face in faces:
            groups.setdefault(dsu.find(index[face])[0], []).append(face)
        comps = []
        for cid, members in enumerate(sorted(groups.values())):
            verts, edges = set(), set()
            for tet, f in members:
                verts.update(self.vertex_of[4 * tet + v] for v in range(4) if v != f)
                edges.update(
                    self.edge_of[6 * tet + e] for e, (x, y) in enumerate(EDGES) if f not in (x, y)
                )
            chi = len(verts) - len(edges) + len(members)
            comps.append(
                BoundaryComponent(
                    id=cid,
                    genus=(2 - chi) // 2,
                    triangles=len(members),
                    euler_characteristic=chi,
                    faces=tuple(members),
                    vertex_classes=frozenset(verts),
                    edge_classes=frozenset(edges),
                )
            )
        self.boundary_components = comps
        self.component_of_face = {face: c.id for c in comps for face in c.faces}

    def _orientation(self):
        t = self.triangulation
        sign = [0] * t.n_tetrahedra
        orientable = True
        for start in range(t.n_tetrahedra):
            if sign[start]:
                continue
            sign[start] = 1
            stack = [start]
            while stack:
                a = stack.pop()
                for f in range(4):
                    other = t.partner.get((a, f))
                    if other is None:
                        continue
                    b, _, p = other
                    want = -p.sign() * sign[a]
                    if sign[b] == 0:
                        sign[b] = want
                        stack.append(b)
                    elif sign[b] != want:
                        orientable = False
        self.orientable = orientable
        self.orientation = sign

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_triangles - self.triangulation.n_tetrahedra

    def boundary_vertex_component(self) -> dict[int, int]:
        """Vertex class -> boundary component id, for vertices on the boundary."""
        out = {}
        for comp in self.boundary_components:
            for v in comp.vertex_classes:
                out.setdefault(v, comp.id)
        return out

    def tetrahedron_boundary_components(self, tet: int) -> set[int]:
        """Boundary components touched by any vertex of ``tet``."""
        where = self.boundary_vertex_component()
        return {where[c] for c in (self.vertex_of[4 * tet + v] for v in range(4)) if c in where}


@dataclass(frozen=True)
class SkeletonReport:
    vertex_classes: int
    edge_classes: int
    triangle_classes: int
    euler_characteristic: int
    vertex_link_types: tuple[str, ...]
    has_reversed_edge: bool
    orientable: bool
    boundary_components: tuple[tuple[int, int, int], ...]
    n_tetrahedra: int
    n_gluings: int
    closed: bool

    def to_dict(self) -> dict:
        return {
            "boundary_components": [
                {"genus": g, "id": i, "triangles": c} for i, g, c in self.boundary_components
            ],
            "closed": self.closed,
            "edge_classes": self.edge_classes,
            "euler_characteristic": self.euler_characteristic,
            "has_reversed_edge": self.has_reversed_edge,
            "n_gluings": self.n_gluings,
            "n_tetrahedra": self.n_tetrahedra,
            "orientable": self.orientable,
            "triangle_classes": self.triangle_classes,
            "vertex_classes": self.vertex_classes,
            "vertex_link_types": list(self.vertex_link_types),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "SkeletonReport":
        return cls(
            vertex_classes=data["vertex_classes"],
            edge_classes=data["edge_classes"],
            triangle_classes=data["triangle_classes"],
            euler_characteristic=data["euler_characteristic"],
            vertex_link_types=tuple(data["vertex_link_types"]),
            has_reversed_edge=data["has_reversed_edge"],
            orientable=data["orientable"],
            boundary_components=tuple(
                (c["id"], c["genus"], c["triangles"]) for c in data["boundary_components"]
            ),
            n_tetrahedra=data["n_tetrahedra"],
            n_gluings=data["n_gluings"],
            closed=data["closed"],
        )

    @classmethod
    def from_json(cls, text: str) -> "SkeletonReport":
        return cls.from_dict(json.loads(text))


def analyze_skeleton(t: Triangulation) -> SkeletonReport:
    sk = Skeleton(t)
    chi = sk.euler_characteristic
    # second route to chi: every unglued face is its own triangle class
    assert chi == sk.n_vertices - sk.n_edges + (4 * t.n_tetrahedra - len(t.gluings)) - t.n_tetrahedra
    closed = (
        len(t.gluings) == 2 * t.n_tetrahedra
        and all(kind == "sphere" for kind in sk.link_types)
        and not sk.reversed_edges
    )
    return SkeletonReport(
        vertex_classes=sk.n_vertices,
        edge_classes=sk.n_edges,
        triangle_classes=sk.n_triangles,
        euler_characteristic=chi,
        vertex_link_types=tuple(sk.link_types),
        has_reversed_edge=bool(sk.reversed_edges),
        orientable=sk.orientable,
        boundary_components=tuple((c.id, c.genus, c.triangles) for c in sk.boundary_components),
        n_tetrahedra=t.n_tetrahedra,
        n_gluings=len(t.gluings),
        closed=closed,
    )


def is_closed_3_manifold(t: Triangulation) -> tuple[bool, SkeletonReport]:
    report = analyze_skeleton(t)
    return report.closed, report


def dual_graph(t: Triangulation) -> Multigraph:
    """One node per tetrahedron, one arc per gluing (self-gluings give loops)."""
    return Multigraph.from_arcs(t.n_tetrahedra, [(g.src_tet, g.dst_tet) for g in t.gluings])


# -- subdivision -------------------------------------------------------------


def barycentric_subdivision(t: Triangulation) -> Triangulation:
    """First barycentric subdivision: 24 tetrahedra per tetrahedron.

    Sub-tetrahedron ``24*tet + FLAG_INDEX[s]`` is spanned by vertex ``s[0]``,
    the midpoint of edge ``s[0]s[1]``, the barycentre of face ``s[0]s[1]s[2]``
    and the barycentre of ``tet`` (local vertices 0, 1, 2, 3).  Face ``i < 3``
    is shared with the flag obtained by swapping ``s[i]`` and ``s[i+1]``; face
    3 lies on face ``s[3]`` of the original tetrahedron.  Every induced gluing
    is the identity on local labels.
    """
    ident = VertexPerm.identity()
    gl = []
    for tet in range(t.n_tetrahedra):
        for s, k in FLAG_INDEX.items():
            for i in range(3):
                s2 = list(s)
                s2[i], s2[i + 1] = s2[i + 1], s2[i]
                k2 = FLAG_INDEX[tuple(s2)]
                if k < k2:
                    gl.append(FaceGluing(24 * tet + k, i, 24 * tet + k2, i, ident))
    for g in t.gluings:
        p = g.perm
        for s, k in FLAG_INDEX.items():
            if s[3] != g.src_face:
                continue
            image = tuple(p[x] for x in s)
            gl.append(FaceGluing(24 * g.src_tet + k, 3, 24 * g.dst_tet + FLAG_INDEX[image], 3, ident))
    return Triangulation.build(24 * t.n_tetrahedra, gl)


def parent_face(sub_tet: int, face: int) -> tuple[int, int]:
    """Face of the unsubdivided triangulation containing face 3 of ``sub_tet``."""
    if face != 3:
        raise ValueError("only face 3 of a sub-tetrahedron lies on an original face")
    return sub_tet // 24, FLAGS[sub_tet % 24][3]


def tetrahedra_touching_several_boundaries(t: Triangulation) -> list[int]:
    sk = Skeleton(t)
    return [tet for tet in range(t.n_tetrahedra) if len(sk.tetrahedron_boundary_components(tet)) > 1]


def boundary_isolation_subdivision(t: Triangulation) -> Triangulation:
    """Subdivide until no tetrahedron meets two boundary components.

    Always subdivides once; a second pass happens only if the first one did
    not separate the boundary components (impossible for a valid manifold).
    """
    out = barycentric_subdivision(t)
    if tetrahedra_touching_several_boundaries(out):
        out = barycentric_subdivision(out)
    return out


def boundary_component_map(original: Triangulation, subdivided: Triangulation) -> dict[int, int]:
    """Boundary component ids of ``subdivided`` mapped to those of ``original``.

    ``subdivided`` must come from ``original`` by repeated barycentric
    subdivision; component numbering is not preserved by subdivision.
    """
    levels, size = 0, subdivided.n_tetrahedra
    while size > original.n_tetrahedra and size % 24 == 0:
        size //= 24
        levels += 1
    if size != original.n_tetrahedra:
        raise ValueError("triangulation is not an iterated subdivision of the original")
    old = Skeleton(original).component_of_face
    out = {}
    for comp in Skeleton(subdivided).boundary_components:
        tet, face = comp.faces[0]
        for _ in range(levels):
            tet, face = parent_face(tet, face)
        out[comp.id] = old[(tet, face)]
    return out

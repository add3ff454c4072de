import random

import pytest

from conftest import corpus_entries, load
from triwidth.heegaard import (
    Decomposition,
    Fork,
    ForkComplex,
    GeneralizedSplitting,
    GenusLedger,
    Piece,
    SplittingError,
    amalgamate,
    compatible_sides,
    derived_cell_counts,
    splitting_from_boundary_triangulation,
    splitting_from_closed_triangulation,
    splitting_sides,
    thick_thin_splitting,
    to_fork_complex,
    two_piece_genus,
    validate_fork_complex,
    validate_generalized,
)
from triwidth.trikernel import (
    Triangulation,
    analyze_skeleton,
    barycentric_subdivision,
    boundary_isolation_subdivision,
)

# -- forks ------------------------------------------------------------------------------


def test_classical_splitting_as_forks():
    ok, problems = validate_fork_complex(ForkComplex((Fork("a", 2), Fork("b", 2)), ((0, 1),)))
    assert ok and problems == []


def test_grip_genus_mismatch():
    ok, problems = validate_fork_complex(ForkComplex((Fork("a", 2), Fork("b", 3)), ((0, 1),)))
    assert not ok and problems[0].code == "genus_mismatch"


def test_wrong_tine_count():
    ok, problems = validate_fork_complex(ForkComplex((Fork("a", 3, (1, 1, 1), n_tines=4),)))
    assert not ok and "tine_count" in {p.code for p in problems}


def test_compression_body_inequality():
    assert Fork("x", 2, (1, 1, 1)).min_grip_genus() == 1
    assert Fork("x", 0, ()).min_grip_genus() == 0
    ok, problems = validate_fork_complex(ForkComplex((Fork("a", 1, (2, 2)),)))
    assert not ok and problems[0].code == "compression_body"


def test_tine_pairings_checked():
    forks = (Fork("a", 1, (1,)), Fork("b", 2, (2,)))
    ok, problems = validate_fork_complex(ForkComplex(forks, (), (((0, 0), (1, 0)),)))
    assert not ok and problems[0].code == "genus_mismatch"
    ok, problems = validate_fork_complex(ForkComplex(forks, (), (((0, 0), (0, 0)),)))
    assert not ok


def test_fork_complex_json_and_dot():
    fc = ForkComplex((Fork("a", 1, (1,)), Fork("b", 1)), ((0, 1),))
    assert ForkComplex.from_json(fc.to_json()).to_json() == fc.to_json()
    dot = fc.to_dot()
    assert "shape=triangle" in dot and "style=dashed" in dot
    assert fc.boundary == ([], [(0, 0)])


# -- generalized splittings ----------------------------------------------------------------

# a four-piece decomposition whose dual graph is a cycle 0-1-2-3-0, genus 2 surfaces
CYCLE = Decomposition(
    tuple(Piece(f"M{i + 1}", (2, 2)) for i in range(4)),
    (((0, 1), (1, 0)), ((1, 1), (2, 0)), ((2, 1), (3, 0)), ((3, 1), (0, 0))),
)


def cycle_splitting(ordering, genus=3):
    return GeneralizedSplitting(CYCLE, ordering, compatible_sides(CYCLE, ordering), (genus,) * 4)


@pytest.mark.parametrize("ordering", [(1, 2, 3, 4), (2, 4, 1, 3)])
def test_orderings_validate(ordering):
    ok, problems = validate_generalized(cycle_splitting(ordering))
    assert ok, problems
    fc = to_fork_complex(cycle_splitting(ordering))
    assert validate_fork_complex(fc)[0]
    assert len(fc.forks) == 8 and fc.boundary == ([], [])


def test_incompatible_side_rejected():
    gs = cycle_splitting((1, 2, 3, 4))
    sides = [list(s) for s in gs.sides]
    sides[1][0] = 2  # piece 2 claims its gluing to piece 1 is on its later side
    bad = GeneralizedSplitting(CYCLE, gs.ordering, sides, gs.splitting_genera)
    ok, problems = validate_generalized(bad)
    assert not ok
    named = [p for p in problems if p.code == "incompatible"]
    assert named and all(((0, 1), (1, 0)) == p.where for p in named)
    with pytest.raises(SplittingError):
        amalgamate(bad)


def test_sides_must_match_ordering_not_just_be_consistent():
    # sides from one ordering, checked against another
    gs = GeneralizedSplitting(CYCLE, (2, 4, 1, 3), compatible_sides(CYCLE, (1, 2, 3, 4)), (3,) * 4)
    assert not validate_generalized(gs)[0]


def test_bad_ordering_rejected():
    ok, problems = validate_generalized(cycle_splitting((1, 1, 3, 4)))
    assert not ok and problems[0].code == "ordering"


def test_genus_too_small_for_tines():
    # a piece with both tori on one side needs grip genus >= 3
    assert not validate_generalized(cycle_splitting((1, 2, 3, 4), genus=2))[0]


def test_single_piece():
    d = Decomposition((Piece("M", ()),), ())
    for order in [(1,)]:
        gs = GeneralizedSplitting(d, order, ((),), (4,))
        assert validate_generalized(gs)[0]
        assert amalgamate(gs).amalgamated_genus == 4


def test_self_gluing_rejected():
    d = Decomposition((Piece("M", (1, 1)),), (((0, 0), (0, 1)),))
    gs = GeneralizedSplitting(d, (1,), ((1, 2),), (2,))
    ok, problems = validate_generalized(gs)
    assert not ok and "self_gluing" in {p.code for p in problems}


def test_generalized_json_roundtrip():
    gs = cycle_splitting((2, 4, 1, 3))
    assert GeneralizedSplitting.from_json(gs.to_json()) == gs


# -- amalgamation -------------------------------------------------------------------------


def test_cycle_amalgamation():
    ledger = amalgamate(cycle_splitting((1, 2, 3, 4)))
    # 4*3 - 4*2 + 1 - (4 - 4)
    assert ledger.amalgamated_genus == 5


def test_two_pieces():
    d = Decomposition((Piece("A", (1,)), Piece("B", (1,))), (((0, 0), (1, 0)),))
    gs = GeneralizedSplitting(d, (1, 2), compatible_sides(d, (1, 2)), (2, 3))
    ledger = amalgamate(gs)
    assert ledger.euler_char_dual == 1
    assert ledger.amalgamated_genus == 4 == two_piece_genus(2, 3, 1)


def test_ledger_must_balance():
    with pytest.raises(ValueError):
        GenusLedger(5, 3, 1, 4)


@pytest.mark.parametrize("g, m, expected", [(5, 3, 5), (7, 0, 7), (1, 1, 1)])
def test_thick_thin(g, m, expected):
    gs = thick_thin_splitting(g, m)
    assert amalgamate(gs).amalgamated_genus == expected


def test_thick_thin_star_ledger():
    ledger = amalgamate(thick_thin_splitting(5, 3))
    assert (ledger.sum_splitting_genera, ledger.sum_gluing_genera, ledger.euler_char_dual) == (8, 3, 1)


def test_thick_thin_needs_genus():
    with pytest.raises(SplittingError):
        thick_thin_splitting(0, 2)
    with pytest.raises(SplittingError):
        thick_thin_splitting(-1, 0)


def test_disconnected_decomposition_rejected():
    d = Decomposition((Piece("A", ()), Piece("B", ())), ())
    with pytest.raises(SplittingError):
        amalgamate(GeneralizedSplitting(d, (1, 2), ((), ()), (1, 1)))


def test_random_two_piece_instances():
    rng = random.Random(3)
    for _ in range(200):
        h = rng.randint(0, 6)
        g1, g2 = rng.randint(h, h + 8), rng.randint(h, h + 8)
        d = Decomposition((Piece("A", (h,)), Piece("B", (h,))), (((0, 0), (1, 0)),))
        gs = GeneralizedSplitting(d, (1, 2), compatible_sides(d, (1, 2)), (g1, g2))
        assert amalgamate(gs).amalgamated_genus == two_piece_genus(g1, g2, h)


# -- splittings from triangulations ----------------------------------------------------------


@pytest.mark.parametrize("entry", corpus_entries("closed"), ids=lambda e: e["name"])
def test_closed_splitting(entry):
    t = load(entry)
    fc, genus = splitting_from_closed_triangulation(t)
    report = analyze_skeleton(t)
    assert genus == t.n_tetrahedra + 1 == report.edge_classes - report.vertex_classes + 1
    assert validate_fork_complex(fc)[0]


def test_closed_splitting_rejects_bounded():
    with pytest.raises(SplittingError):
        splitting_from_closed_triangulation(Triangulation.build(1, []))


@pytest.mark.parametrize("entry", corpus_entries("closed"), ids=lambda e: e["name"])
def test_closed_trivial_partition_matches(entry):
    t = load(entry)
    _, genus = splitting_from_boundary_triangulation(t, [], [])
    assert genus == splitting_from_closed_triangulation(t)[1]


def test_single_tet_sphere_on_second_side():
    t = boundary_isolation_subdivision(Triangulation.build(1, []))
    fc, genus = splitting_from_boundary_triangulation(t, [], [0])
    assert genus >= 0
    assert fc.forks[1].tine_genera == (0,) and fc.forks[0].tine_genera == ()
    assert validate_fork_complex(fc)[0]


def test_single_tet_sphere_on_first_side():
    t = boundary_isolation_subdivision(Triangulation.build(1, []))
    s1, s2 = splitting_sides(t, [0], [])
    assert s1.genus == s2.genus
    assert s1.lower_boundary_genera == (0,)


@pytest.mark.parametrize("name, genus", [("sphere_x_interval", 0), ("torus_x_interval", 1)])
def test_thickened_surface_partition(name, genus):
    entry = next(e for e in corpus_entries("bounded") if e["name"] == name)
    t = boundary_isolation_subdivision(load(entry))
    fc, g = splitting_from_boundary_triangulation(t, [0], [1])
    assert fc.forks[0].tine_genera == (genus,) and fc.forks[1].tine_genera == (genus,)
    assert validate_fork_complex(fc)[0]
    assert g >= 2 * genus


def test_non_manifold_rejected():
    entry = next(e for e in corpus_entries("bounded") if e["name"] == "two_tet_partial")
    t = boundary_isolation_subdivision(load(entry))
    with pytest.raises(SplittingError):
        splitting_from_boundary_triangulation(t, [], [0])


def test_partition_must_cover_boundary():
    t = boundary_isolation_subdivision(Triangulation.build(1, []))
    with pytest.raises(SplittingError):
        splitting_sides(t, [], [])


def test_derived_cell_counts_match_subdivision():
    for t in (Triangulation.build(1, []), load(corpus_entries("closed")[0])):
        v, e, f, c = derived_cell_counts(t)
        r = analyze_skeleton(barycentric_subdivision(t))
        assert (v, e, f, c) == (r.vertex_classes, r.edge_classes, r.triangle_classes, 24 * t.n_tetrahedra)

import pytest

from curvekit import SurfaceType, classify_separation, cut_along, homology_mod2
from curvekit.cutting import (NONOUTER_SEPARATING, NONSEPARATING, OUTER,
                              TWICE_PUNCTURED_DISC, cut_along_detailed)

import worlds


def test_two_puncture_block_cuts_off_a_twice_punctured_disc():
    tri = worlds.triangulation("S0_6")
    c1 = worlds.block_vector("S0_6", {1, 2})
    result = cut_along_detailed(tri, [c1])
    surfaces = sorted(p.surface for p in result.pieces)
    assert surfaces == [SurfaceType(0, 2, 1), SurfaceType(0, 4, 1)]
    small = min(result.pieces, key=lambda p: p.surface.punctures)
    assert small.surface == TWICE_PUNCTURED_DISC
    assert len(small.punctures) == 2
    big = max(result.pieces, key=lambda p: p.surface.punctures)
    assert small.punctures | big.punctures == set(range(6))
    assert small.boundary == (0,) and big.boundary == (0,)
    assert classify_separation(tri, c1) == OUTER


def test_three_puncture_block_separates_into_equal_halves():
    tri = worlds.triangulation("S0_6")
    c2 = worlds.block_vector("S0_6", {1, 2, 3})
    assert cut_along(tri, [c2]) == [SurfaceType(0, 3, 1), SurfaceType(0, 3, 1)]
    assert classify_separation(tri, c2) == NONOUTER_SEPARATING


def test_torus_curve_is_nonseparating():
    tri = worlds.triangulation("S1_1")
    w = (1, 0, 1)
    assert cut_along(tri, [w]) == [SurfaceType(0, 1, 2)]
    assert classify_separation(tri, w) == NONSEPARATING


def test_mod_two_homology_detects_separation():
    t6 = worlds.triangulation("S0_6")
    c2 = worlds.block_vector("S0_6", {1, 2, 3})
    assert set(homology_mod2(t6, c2)) == {0}
    t2 = worlds.triangulation("S2_1")
    for w in worlds.universe("S2_1", 8).vectors:
        cls = homology_mod2(t2, w)
        separating = classify_separation(t2, w) != NONSEPARATING
        assert (set(cls) == {0}) == separating


def test_piece_containing_places_disjoint_curves():
    tri = worlds.triangulation("S0_6")
    c1 = worlds.block_vector("S0_6", {1, 2})
    c2 = worlds.block_vector("S0_6", {1, 2, 3})
    crossing = worlds.block_vector("S0_6", {2, 3, 4})
    result = cut_along_detailed(tri, [c2])
    j = result.piece_containing(c1)
    assert j is not None
    assert result.pieces[j].surface == SurfaceType(0, 3, 1)
    assert result.piece_containing(c2) is None
    with pytest.raises(ValueError):
        result.piece_containing(crossing)


def test_cut_pieces_account_for_euler_characteristic():
    for name in ("S0_5", "S0_6", "S1_2", "S2_1"):
        tri = worlds.triangulation(name)
        whole = tri.surface_type().euler_characteristic()
        for w in worlds.universe(name, 6).vectors:
            pieces = cut_along(tri, [w])
            assert sum(p.euler_characteristic() for p in pieces) == whole


def test_cutting_along_nothing_returns_the_surface():
    tri = worlds.triangulation("S1_2")
    assert cut_along(tri, []) == [SurfaceType(1, 2)]


def test_cut_rejects_crossing_families():
    tri = worlds.triangulation("S0_6")
    c2 = worlds.block_vector("S0_6", {1, 2, 3})
    crossing = worlds.block_vector("S0_6", {2, 3, 4})
    with pytest.raises(ValueError):
        cut_along(tri, [c2, crossing])

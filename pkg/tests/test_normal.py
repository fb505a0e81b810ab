import pytest

from curvekit import NormalCurve, punctured_sphere, trace_components, validate_normal
from curvekit.normal import enclosing_vector, vertex_link, vertex_links

import worlds


def test_vertex_links_are_admissible_single_curves():
    for name in ("S0_5", "S0_6", "S1_2", "S2_1"):
        tri = worlds.triangulation(name)
        links = vertex_links(tri)
        assert len(links) == tri.surface_type().punctures
        for w in links:
            assert validate_normal(tri, w) == []
            assert len(trace_components(tri, w)) == 1


def test_enclosing_vector_of_one_puncture_is_its_link():
    tri = worlds.triangulation("S0_6")
    for v in range(6):
        assert enclosing_vector(tri, {v}) == vertex_link(tri, v)


def test_enclosing_vector_matches_named_fixtures():
    from curvekit.data import named_curves

    named = named_curves("S0_6")
    assert worlds.block_vector("S0_6", {1, 2}) == named["c1"]
    assert worlds.block_vector("S0_6", {1, 2, 3}) == named["c2"]
    assert worlds.block_vector("S0_6", {5, 6}) == named["c3"]


def test_validate_normal_reports_parity_and_triangle_problems():
    tri = worlds.triangulation("S0_5")
    good = worlds.universe("S0_5", 8).vectors[0]
    assert validate_normal(tri, good) == []
    bumped = list(good)
    bumped[0] += 1
    assert validate_normal(tri, tuple(bumped)) != []
    spiked = [0] * tri.edge_count
    spiked[0] = 2
    assert validate_normal(tri, tuple(spiked)) != []


def test_trace_splits_a_disjoint_sum():
    tri = worlds.triangulation("S0_6")
    wa = worlds.block_vector("S0_6", {1, 2})
    wb = worlds.block_vector("S0_6", {5, 6})
    total = tuple(x + y for x, y in zip(wa, wb))
    assert sorted(trace_components(tri, total)) == sorted([wa, wb])


def test_doubled_curve_traces_to_two_parallel_copies():
    tri = worlds.triangulation("S0_5")
    w = worlds.universe("S0_5", 8).vectors[0]
    doubled = tuple(2 * x for x in w)
    assert trace_components(tri, doubled) == [w, w]


def test_normal_curve_validation_and_identity():
    tri = worlds.triangulation("S0_5")
    w = worlds.universe("S0_5", 8).vectors[0]
    curve = NormalCurve(tri, w)
    assert curve.total_weight() == sum(w)
    assert curve == NormalCurve(tri, w)
    assert len({curve, NormalCurve(tri, w)}) == 1
    bad = [0] * tri.edge_count
    bad[0] = 1
    with pytest.raises(ValueError):
        NormalCurve(tri, tuple(bad))


def test_normal_curve_json_round_trip():
    tri = worlds.triangulation("S1_2")
    w = worlds.universe("S1_2", 8).vectors[3]
    curve = NormalCurve(tri, w)
    assert NormalCurve.from_json(tri, curve.to_json()) == curve


def test_link_count_matches_punctures_everywhere():
    for n in (4, 5, 6, 8):
        tri = worlds.triangulation("S0_%d" % n)
        assert len(vertex_links(tri)) == n

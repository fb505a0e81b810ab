import pytest

from curvekit import CurveUniverse, ResourceLimitError, trace_components, validate_normal
from curvekit.normal import vertex_links
from curvekit import universe as universe_module

import oracles
import worlds


def test_enumeration_matches_the_naive_oracle():
    for name, bound in (("S0_5", 8), ("S0_6", 6), ("S2_1", 8)):
        tri = worlds.triangulation(name)
        assert worlds.universe(name, bound).vectors == oracles.naive_curve_vectors(tri, bound)


def test_four_punctured_sphere_curves_are_farey_slopes():
    for bound, count in ((4, 3), (8, 6), (12, 12)):
        uni = worlds.universe("S0_4", bound)
        assert len(uni) == count
        expected = sorted(oracles.slope_vectors_within("sphere", bound))
        assert uni.vectors == expected


def test_once_punctured_torus_curves_are_farey_slopes():
    for bound, count in ((2, 3), (4, 6), (8, 18), (12, 36)):
        uni = worlds.universe("S1_1", bound)
        assert len(uni) == count
        expected = sorted(oracles.slope_vectors_within("torus", bound))
        assert uni.vectors == expected


def test_worker_count_does_not_change_the_universe():
    tri = worlds.triangulation("S0_6")
    solo = CurveUniverse.enumerate(tri, 8, workers=1)
    for workers in (2, 3):
        split = CurveUniverse.enumerate(tri, 8, workers=workers)
        assert split.vectors == solo.vectors


def test_universe_members_are_essential_connected_curves():
    for name in ("S0_5", "S1_2"):
        tri = worlds.triangulation(name)
        links = set(vertex_links(tri))
        uni = worlds.universe(name, 8)
        assert uni.vectors == sorted(set(uni.vectors))
        for w in uni.vectors:
            assert validate_normal(tri, w) == []
            assert len(trace_components(tri, w)) == 1
            assert w not in links


def test_save_and_load_round_trip(tmp_path):
    tri = worlds.triangulation("S1_2")
    uni = worlds.universe("S1_2", 8)
    path = tmp_path / "u.jsonl"
    uni.save(path)
    again = CurveUniverse.load(tri, path)
    assert again.bound == uni.bound
    assert again.vectors == uni.vectors


def test_load_rejects_foreign_and_malformed_files(tmp_path):
    uni = worlds.universe("S0_5", 6)
    path = tmp_path / "u.jsonl"
    uni.save(path)
    with pytest.raises(ValueError):
        CurveUniverse.load(worlds.triangulation("S0_6"), path)
    junk = tmp_path / "junk.jsonl"
    junk.write_text('{"format": "shopping-list"}\n')
    with pytest.raises(ValueError):
        CurveUniverse.load(worlds.triangulation("S0_5"), junk)


def test_id_lookup_is_a_bijection_with_errors():
    uni = worlds.universe("S0_6", 6)
    for k in uni.ids():
        assert uni.id_by_curve(uni.curve_by_id(k)) == k
    with pytest.raises(LookupError):
        uni.curve_by_id(len(uni))
    with pytest.raises(LookupError):
        uni.id_by_curve((99,) * uni.triangulation.edge_count)


def test_enumerate_rejects_empty_bounds():
    tri = worlds.triangulation("S0_5")
    with pytest.raises(ValueError):
        CurveUniverse.enumerate(tri, 0)


def test_generation_cap_guards_runaway_searches(monkeypatch):
    monkeypatch.setattr(universe_module, "GENERATION_CAP", 5)
    with pytest.raises(ResourceLimitError):
        universe_module.enumerate_vectors(worlds.triangulation("S0_6"), 10)

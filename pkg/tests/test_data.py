import pytest

from curvekit import validate_normal
from curvekit.data import (default_bound, exhaustion_fixtures, mapping_fixtures,
                           named_curves, negative_fixtures,
                           reference_triangulation, restriction_fixture,
                           surface_names, surface_type_of)

import worlds


def test_every_symbolic_surface_resolves():
    names = surface_names()
    assert names == ["S0_12", "S0_4", "S0_5", "S0_6", "S0_8",
                     "S1_1", "S1_2", "S2_1"]
    for name in names:
        genus, punctures = name[1:].split("_")
        st = reference_triangulation(name).validate()
        assert (st.genus, st.punctures) == (int(genus), int(punctures))
        assert surface_type_of(name) == st
        assert default_bound(name) >= 1


def test_unknown_surface_names_raise():
    with pytest.raises(KeyError):
        reference_triangulation("S9_9")


def test_mapping_fixture_counts_and_identity_leader():
    for name in ("S0_5", "S0_6", "S1_2", "S2_1"):
        fixtures = mapping_fixtures(name)
        assert len(fixtures) >= 20
        names = [fid for fid, _ in fixtures]
        assert len(set(names)) == len(names)
        first = fixtures[0][1]
        assert first.flips == ()
        assert all(k == v for k, v in first.relabeling.items())


def test_named_curves_are_admissible_and_within_bounds():
    for name in ("S0_5", "S0_6", "S0_8", "S1_2", "S2_1"):
        tri = worlds.triangulation(name)
        bound = default_bound(name)
        table = named_curves(name)
        assert table
        for label, w in table.items():
            assert validate_normal(tri, w) == [], label
            assert sum(w) <= bound, label


def test_negative_fixtures_cover_three_distinct_checks():
    records = negative_fixtures()
    assert len(records) >= 3
    designated = {r["designated"] for r in records}
    assert designated == {"edge-preservation", "class-preservation",
                          "peripheral-preservation"}
    for r in records:
        assert r["mode"] in ("universe", "curves")
        assert r["swap_curves"]


def test_exhaustion_fixtures_include_one_valid_and_four_violators():
    records = exhaustion_fixtures()["fixtures"]
    assert len(records) == 5
    by_name = {r["name"]: r for r in records}
    assert by_name["valid_two_stage"]["expect"] == []
    violators = [r for r in records if r["expect"]]
    assert len(violators) == 4
    assert sorted({v["expect"][0] for v in violators}) == [
        "boundary-curves", "complement-complexity", "finite-types", "nesting"]


def test_restriction_fixture_is_well_formed():
    record = restriction_fixture()
    assert record["surface"] == "S0_8"
    tri = worlds.triangulation("S0_8")
    for w in record["inner"]:
        assert validate_normal(tri, tuple(w)) == []
    assert record["negative_swap"]

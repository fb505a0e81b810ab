import random

import pytest

from curvekit import (CurveUniverse, EscapesUniverseError, GraphSlice,
                      PantsSurvey, SurfaceType, check_restriction,
                      check_simplicial_iso, full_report, induced_iso,
                      random_mapping_class, validate_exhaustion,
                      verify_invariant_preservation)
from curvekit.data import (exhaustion_fixtures, mapping_fixtures,
                           negative_fixtures, reference_triangulation,
                           restriction_fixture)
from curvekit.harness import (CandidateIso, ExhaustionDescriptor,
                              ExhaustionStage, boundary_match,
                              exhaustion_violations, failed_checks,
                              find_truncation_automorphisms)

import worlds


def _world(record):
    """Survey plus candidate map for a negative fixture record."""
    tri = reference_triangulation(record["surface"])
    if record["mode"] == "universe":
        universe = CurveUniverse.enumerate(tri, record["bound"])
    else:
        vectors = sorted(tuple(w) for w in record["curves"])
        universe = CurveUniverse(tri, max(sum(w) for w in vectors), vectors)
    gslice = GraphSlice.build(universe)
    swaps = [(universe.id_by_curve(tuple(wa)), universe.id_by_curve(tuple(wb)))
             for wa, wb in record["swap_curves"]]
    return PantsSurvey(gslice), CandidateIso.from_transpositions(gslice, swaps)


def test_identity_candidate_passes_every_check():
    survey = worlds.survey("S0_5", 8)
    ciso = CandidateIso.identity(survey.slice)
    assert check_simplicial_iso(ciso) == []
    assert verify_invariant_preservation(ciso, survey) == []
    assert full_report(ciso, survey) == []


def test_candidate_maps_must_be_bijections():
    gslice = worlds.graph_slice("S0_5", 8)
    squash = {v: 0 for v in gslice.adjacency}
    with pytest.raises(ValueError):
        CandidateIso(gslice, gslice, squash)


def test_candidate_algebra():
    gslice = worlds.graph_slice("S0_5", 8)
    swap = CandidateIso.from_transpositions(gslice, [(0, 1)])
    assert swap[0] == 1 and swap[1] == 0 and swap[2] == 2
    assert swap.image_ids((0, 1, 5)) == (0, 1, 5)
    assert swap.inverse().mapping == swap.mapping
    both = swap.compose(swap)
    assert all(both[v] == v for v in gslice.adjacency)


def test_induced_maps_respect_composition():
    survey = worlds.survey("S1_2", 10)
    fixtures = dict(mapping_fixtures("S1_2"))
    m1, m2 = fixtures["mc_03"], fixtures["mc_05"]
    one = induced_iso(m1, survey.slice)
    two = induced_iso(m2, survey.slice)
    combined = induced_iso(m2.compose(m1), survey.slice)
    assert combined.mapping == two.compose(one).mapping


def test_shipped_mapping_fixtures_preserve_everything():
    survey = worlds.survey("S0_5", 10)
    for fid, mc in mapping_fixtures("S0_5"):
        ciso = induced_iso(mc, survey.slice)
        assert full_report(ciso, survey) == [], fid


def test_escaping_actions_are_reported_not_truncated():
    tri = worlds.triangulation("S1_1")
    gslice = GraphSlice.build(CurveUniverse.enumerate(tri, 4))
    mc = random_mapping_class(tri, random.Random(0))
    with pytest.raises(EscapesUniverseError) as err:
        induced_iso(mc, gslice)
    assert err.value.escapees


def test_negative_fixtures_fail_their_designated_check_first():
    for record in negative_fixtures():
        survey, ciso = _world(record)
        failed = failed_checks(full_report(ciso, survey))
        assert failed, record["name"]
        assert failed[0] == record["designated"], record["name"]


def test_curve_list_fixtures_fail_exactly_one_check():
    for record in negative_fixtures():
        if record["mode"] != "curves":
            continue
        survey, ciso = _world(record)
        failed = failed_checks(full_report(ciso, survey))
        assert failed == [record["designated"]], record["name"]


def test_restriction_fixture_keeps_inner_curves_inside():
    record = restriction_fixture()
    tri = reference_triangulation(record["surface"])
    universe = CurveUniverse.enumerate(tri, record["bound"])
    gslice = GraphSlice.build(universe)
    stype = SurfaceType(*record["inner_surface"])
    inner = [universe.id_by_curve(tuple(w)) for w in record["inner"]]
    assert check_restriction(CandidateIso.identity(gslice), inner, stype)
    swaps = [(universe.id_by_curve(tuple(wa)), universe.id_by_curve(tuple(wb)))
             for wa, wb in record["negative_swap"]]
    bad = CandidateIso.from_transpositions(gslice, swaps)
    assert not check_restriction(bad, inner, stype)


def _descriptor(record):
    tri = reference_triangulation(record["surface"])
    return ExhaustionDescriptor(tri, [
        ExhaustionStage(SurfaceType(*s["surface"]),
                        [tuple(w) for w in s["boundary"]],
                        [SurfaceType(*c) for c in s["complement_pieces"]],
                        s["infinite_flags"])
        for s in record["stages"]])


def test_exhaustion_fixtures_violate_exactly_as_declared():
    for record in exhaustion_fixtures()["fixtures"]:
        report = validate_exhaustion(_descriptor(record))
        assert sorted({v["check"] for v in report}) == sorted(record["expect"]), \
            record["name"]
        assert exhaustion_violations(report) == report


def test_finite_complement_flags_flag_symbolically():
    record = next(r for r in exhaustion_fixtures()["fixtures"]
                  if r["name"] == "valid_two_stage")
    descriptor = _descriptor(record)
    descriptor.stages[0].infinite_flags = [False] * len(
        descriptor.stages[0].infinite_flags)
    report = validate_exhaustion(descriptor)
    assert [v["check"] for v in report] == ["infinite-complements"]
    assert report[0]["symbolic"] is True


def test_exhaustion_descriptor_json_round_trip():
    record = exhaustion_fixtures()["fixtures"][0]
    descriptor = _descriptor(record)
    again = ExhaustionDescriptor.from_json(descriptor.triangulation,
                                           descriptor.to_json())
    assert again.to_json() == descriptor.to_json()


def test_boundary_match_compares_piece_types():
    gslice = worlds.graph_slice("S0_6", 10)
    universe = gslice.universe
    c1 = universe.id_by_curve(worlds.block_vector("S0_6", {1, 2}))
    c2 = universe.id_by_curve(worlds.block_vector("S0_6", {1, 2, 3}))
    c3 = universe.id_by_curve(worlds.block_vector("S0_6", {5, 6}))
    ident = CandidateIso.identity(gslice)
    for entry in boundary_match(ident, [(c1,), (c3,)]):
        assert entry["status"] == "match"
    swap = CandidateIso.from_transpositions(gslice, [(c1, c2)])
    report = boundary_match(swap, [(c1,), (c1, c3), (c3,)])
    assert [e["status"] for e in report] == ["mismatch", "mismatch", "match"]
    assert report[0]["source"] == "S_{0,2,1}"
    assert report[0]["target"] == "S_{0,3,1}"


def test_boundary_match_requires_simplicial_images():
    gslice = worlds.graph_slice("S0_6", 10)
    universe = gslice.universe
    c1 = universe.id_by_curve(worlds.block_vector("S0_6", {1, 2}))
    c3 = universe.id_by_curve(worlds.block_vector("S0_6", {5, 6}))
    crossing = universe.id_by_curve(worlds.block_vector("S0_6", {4, 5}))
    swap = CandidateIso.from_transpositions(gslice, [(c1, crossing)])
    with pytest.raises(ValueError):
        boundary_match(swap, [(c1, c3)])


def test_no_truncation_automorphisms_on_the_small_sphere():
    assert find_truncation_automorphisms(worlds.survey("S0_5", 8)) == []

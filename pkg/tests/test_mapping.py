import random

import pytest

from curvekit import (MappingClass, classify_separation, intersection_number,
                      random_mapping_class, triangulation_symmetries,
                      validate_normal)
from curvekit.data import data_path
from curvekit.mapping import flip_weights, load_mapping_classes

import worlds


def test_flip_transport_preserves_intersection_numbers():
    tri = worlds.triangulation("S0_5")
    vectors = worlds.universe("S0_5", 6).vectors
    for e in range(tri.edge_count):
        if not tri.is_flippable(e):
            continue
        flipped = tri.flip(e)
        for wa in vectors:
            for wb in vectors:
                assert intersection_number(
                    flipped, flip_weights(tri, wa, e), flip_weights(tri, wb, e)
                ) == intersection_number(tri, wa, wb)


def test_identity_fixes_every_vector():
    tri = worlds.triangulation("S1_2")
    ident = MappingClass.identity(tri)
    probes = worlds.universe("S1_2", 8).vectors
    assert ident.is_identity_action(probes)


def test_inverse_undoes_the_action():
    tri = worlds.triangulation("S0_6")
    rng = random.Random(5)
    for _ in range(4):
        mc = random_mapping_class(tri, rng)
        inv = mc.inverse()
        for w in worlds.universe("S0_6", 6).vectors:
            assert inv.apply(mc.apply(w)) == w
            assert mc.apply(inv.apply(w)) == w


def test_composition_acts_as_self_after_first():
    tri = worlds.triangulation("S2_1")
    rng = random.Random(11)
    m1 = random_mapping_class(tri, rng)
    m2 = random_mapping_class(tri, rng)
    both = m2.compose(m1)
    for w in worlds.universe("S2_1", 6).vectors:
        assert both.apply(w) == m2.apply(m1.apply(w))


def test_action_preserves_curve_invariants():
    tri = worlds.triangulation("S1_2")
    rng = random.Random(23)
    mc = random_mapping_class(tri, rng)
    for w in worlds.universe("S1_2", 8).vectors:
        image = mc.apply(w)
        assert validate_normal(tri, image) == []
        assert classify_separation(tri, image) == classify_separation(tri, w)


def test_mapping_class_json_round_trip():
    tri = worlds.triangulation("S0_5")
    mc = random_mapping_class(tri, random.Random(7))
    again = MappingClass.from_json(tri, mc.to_json())
    assert again.flips == mc.flips
    assert again.relabeling == mc.relabeling


def test_symmetry_counts_of_small_triangulations():
    assert len(triangulation_symmetries(worlds.triangulation("S0_4"))) == 12
    assert len(triangulation_symmetries(worlds.triangulation("S1_1"))) == 3


def test_random_classes_are_seed_deterministic():
    tri = worlds.triangulation("S0_6")
    a = random_mapping_class(tri, random.Random(42))
    b = random_mapping_class(tri, random.Random(42))
    assert a.flips == b.flips and a.relabeling == b.relabeling


def test_mapping_class_rejects_broken_relabelings():
    tri = worlds.triangulation("S0_5")
    squash = {e: 0 for e in range(tri.edge_count)}
    with pytest.raises(ValueError):
        MappingClass(tri, [], squash)


def test_fixture_files_load_as_mapping_classes():
    for name in ("S0_5", "S0_6", "S1_2", "S2_1"):
        path = data_path("fixtures", "mapping", "%s.json" % name)
        classes = load_mapping_classes(worlds.triangulation(name), path)
        assert len(classes) >= 20

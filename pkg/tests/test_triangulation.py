import pytest

from curvekit import (Triangulation, ambient, four_punctured_sphere,
                      genus_two_one_puncture, once_punctured_torus,
                      punctured_sphere, twice_punctured_torus)
from curvekit.triangulation import insert_puncture, polygon_vertex_cycle, relabelings_onto

BUILDERS = [
    (four_punctured_sphere, ambient(0, 4)),
    (lambda: punctured_sphere(5), ambient(0, 5)),
    (lambda: punctured_sphere(6), ambient(0, 6)),
    (once_punctured_torus, ambient(1, 1)),
    (twice_punctured_torus, ambient(1, 2)),
    (genus_two_one_puncture, ambient(2, 1)),
]


def test_builders_have_declared_types():
    for build, surface in BUILDERS:
        tri = build()
        assert tri.surface_type() == surface
        assert tri.validate() == surface


def test_euler_count_relations():
    # an ideal triangulation of S_{g,n} has 2(2g-2+n) triangles, 3(2g-2+n) edges
    for build, surface in BUILDERS:
        tri = build()
        base = 2 * surface.genus - 2 + surface.punctures
        assert tri.triangle_count == 2 * base
        assert tri.edge_count == 3 * base
        assert tri.vertex_count == surface.punctures


def test_every_edge_has_two_sides():
    tri = punctured_sphere(6)
    for e in range(tri.edge_count):
        sides = tri.sides_of_edge(e)
        assert len(sides) == 2
        for side in sides:
            assert tri.edge_of_side(side) == e
            assert tri.glued_side(side) in sides


def test_vertex_orbits_partition_corners():
    tri = punctured_sphere(5)
    orbits = tri.vertex_orbits()
    assert len(orbits) == 5
    corners = [c for orbit in orbits for c in orbit]
    assert len(corners) == 3 * tri.triangle_count
    assert len(set(corners)) == len(corners)


def test_flip_is_an_involution():
    for build, surface in BUILDERS:
        tri = build()
        for e in range(tri.edge_count):
            if not tri.is_flippable(e):
                continue
            flipped = tri.flip(e)
            assert flipped.validate() == surface
            assert not tri.is_same_triangulation(flipped)
            assert tri.is_same_triangulation(flipped.flip(e))
            break


def test_json_round_trip():
    tri = twice_punctured_torus()
    again = Triangulation.from_json(tri.to_json())
    assert tri.is_same_triangulation(again)
    assert tri.content_hash() == again.content_hash()


def test_json_rejects_wrong_declared_surface():
    obj = punctured_sphere(5).to_json()
    obj["surface"] = ambient(0, 6).to_json()
    with pytest.raises(ValueError):
        Triangulation.from_json(obj)


def test_content_hash_separates_triangulations():
    hashes = {build().content_hash() for build, _ in BUILDERS}
    assert len(hashes) == len(BUILDERS)


def test_polygon_vertex_cycle_is_a_puncture_ordering():
    for n in (4, 5, 6, 8):
        tri = punctured_sphere(n) if n != 4 else four_punctured_sphere()
        cycle = polygon_vertex_cycle(tri, n)
        assert sorted(cycle) == list(range(n))


def test_relabelings_contain_the_identity():
    tri = punctured_sphere(5)
    maps = relabelings_onto(tri, tri)
    assert any(all(m[k] == k for k in m) for m in maps)


def test_insert_puncture_adds_one():
    tri = punctured_sphere(5)
    bigger = insert_puncture(tri, 0)
    assert bigger.validate() == ambient(0, 6)

"""Lazily built, process-wide universes, slices and surveys for the tests.

Building a slice or survey twice is pure waste, so every test pulls
shared instances from here; keys are (kind, surface name, bound).
"""

from curvekit import CurveUniverse, GraphSlice, PantsSurvey
from curvekit.data import default_bound, reference_triangulation

_cache = {}


def triangulation(name):
    key = ("tri", name)
    if key not in _cache:
        _cache[key] = reference_triangulation(name)
    return _cache[key]


def universe(name, bound=None):
    if bound is None:
        bound = default_bound(name)
    key = ("uni", name, bound)
    if key not in _cache:
        _cache[key] = CurveUniverse.enumerate(triangulation(name), bound)
    return _cache[key]


def graph_slice(name, bound=None):
    if bound is None:
        bound = default_bound(name)
    key = ("slice", name, bound)
    if key not in _cache:
        _cache[key] = GraphSlice.build(universe(name, bound))
    return _cache[key]


def survey(name, bound=None):
    if bound is None:
        bound = default_bound(name)
    key = ("survey", name, bound)
    if key not in _cache:
        _cache[key] = PantsSurvey(graph_slice(name, bound))
    return _cache[key]


def block_vector(name, positions):
    """Enclosing vector of a set of 1-based rim positions on a sphere."""
    from curvekit.normal import enclosing_vector
    from curvekit.triangulation import polygon_vertex_cycle

    tri = triangulation(name)
    cycle = polygon_vertex_cycle(tri, tri.surface_type().punctures)
    return enclosing_vector(tri, {cycle[p - 1] for p in positions})

"""Shipped reference data: triangulations, bounds, and fixtures.

Everything lives under the package's ``data/`` directory unless the
``CURVEKIT_DATA_DIR`` environment variable points somewhere else.
Files are plain JSON so they can be regenerated or edited by hand;
``tools/build_data.py`` rebuilds the whole tree deterministically.
"""

import json
import os

from .mapping import MappingClass
from .surface import SurfaceType
from .triangulation import (Triangulation, four_punctured_sphere,
                            genus_two_one_puncture, once_punctured_torus,
                            punctured_sphere, twice_punctured_torus)

SURFACE_BUILDERS = {
    "S0_4": four_punctured_sphere,
    "S0_5": lambda: punctured_sphere(5),
    "S0_6": lambda: punctured_sphere(6),
    "S0_8": lambda: punctured_sphere(8),
    "S0_12": lambda: punctured_sphere(12),
    "S1_1": once_punctured_torus,
    "S1_2": twice_punctured_torus,
    "S2_1": genus_two_one_puncture,
}


def data_dir():
    override = os.environ.get("CURVEKIT_DATA_DIR")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "data")


def data_path(*parts):
    return os.path.join(data_dir(), *parts)


def load_json(*parts):
    with open(data_path(*parts)) as fh:
        return json.load(fh)


def surface_names():
    return sorted(SURFACE_BUILDERS)


def reference_triangulation(name):
    """The shipped triangulation for a symbolic surface name."""
    if name not in SURFACE_BUILDERS:
        raise KeyError("unknown surface %r; expected one of %s"
                       % (name, ", ".join(surface_names())))
    path = data_path("triangulations", "%s.json" % name)
    if os.path.exists(path):
        with open(path) as fh:
            return Triangulation.from_json(json.load(fh))
    return SURFACE_BUILDERS[name]()


def default_bound(name):
    """The shipped enumeration bound for a symbolic surface name."""
    defaults = load_json("defaults.json")
    return defaults["bounds"][name]


def mapping_fixtures(name):
    """Shipped mapping classes for a surface, as (fixture id, class)."""
    tri = reference_triangulation(name)
    items = load_json("fixtures", "mapping", "%s.json" % name)
    return [(item["name"], MappingClass.from_json(tri, item)) for item in items]


def named_curves(name):
    """Weight vectors of the named fixture curves on a surface."""
    table = load_json("fixtures", "named_curves.json")
    return {k: tuple(w) for k, w in table.get(name, {}).items()}


def negative_fixtures():
    """The constructed non-geometric bijection fixtures.

    Each record carries its own world: either a full enumerated
    universe ("universe" mode, with a bound) or an explicit curve list
    ("curves" mode), plus the transpositions and the designated check.
    """
    return load_json("fixtures", "negative.json")


def restriction_fixture():
    return load_json("fixtures", "restriction.json")


def exhaustion_fixtures():
    return load_json("fixtures", "exhaustion.json")


def surface_type_of(name):
    return reference_triangulation(name).surface_type()


def parse_surface_type(obj):
    return SurfaceType.from_json(obj)

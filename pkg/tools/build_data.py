"""Regenerate the shipped data tree under src/curvekit/data/.

Deterministic: fixed seeds, sorted JSON keys.  Every fixture is
verified while it is generated — mapping classes must pass the full
invariant ladder, negative fixtures must fail exactly their designated
check, exhaustion descriptors must violate exactly their designated
condition — so a successful run is itself a consistency check.

Run from the repository root:  python tools/build_data.py
"""

import json
import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from curvekit.cutting import NONSEPARATING, classify_separation
from curvekit.errors import EscapesUniverseError
from curvekit.graphs import GraphSlice
from curvekit.harness import (CandidateIso, ExhaustionDescriptor,
                              ExhaustionStage, check_restriction,
                              failed_checks, full_report, induced_iso,
                              validate_exhaustion)
from curvekit.mapping import MappingClass, random_mapping_class, triangulation_symmetries
from curvekit.normal import enclosing_vector
from curvekit.pants import PantsSurvey, genus_capture_multicurve
from curvekit.surface import SurfaceType
from curvekit.triangulation import polygon_vertex_cycle, punctured_sphere
from curvekit.universe import CurveUniverse
from curvekit import data as datamod

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "curvekit", "data")

BOUNDS = {
    "S0_4": 12,
    "S0_5": 10,
    "S0_6": 10,
    "S0_8": 14,
    "S0_12": 6,
    "S1_1": 12,
    "S1_2": 10,
    "S2_1": 10,
}

TEST_SURFACES = ["S0_5", "S0_6", "S1_2", "S2_1"]

MAPPING_FIXTURES_PER_SURFACE = 24
SEED = 108


def dump(obj, *parts):
    path = os.path.join(DATA, *parts)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print("wrote", os.path.relpath(path, DATA))


def block_vector(tri, n, positions):
    cyc = polygon_vertex_cycle(tri, n)
    return enclosing_vector(tri, {cyc[p - 1] for p in positions})


def surveys_for(names):
    out = {}
    for name in names:
        tri = datamod.SURFACE_BUILDERS[name]()
        uni = CurveUniverse.enumerate(tri, BOUNDS[name])
        out[name] = PantsSurvey(GraphSlice.build(uni))
    return out


def write_triangulations():
    for name, builder in sorted(datamod.SURFACE_BUILDERS.items()):
        dump(builder().to_json(), "triangulations", "%s.json" % name)


def write_defaults():
    dump({"bounds": BOUNDS}, "defaults.json")


def write_mapping_fixtures(surveys):
    for name in TEST_SURFACES:
        sv = surveys[name]
        tri = sv.triangulation
        rng = random.Random(SEED)
        encodings = set()
        fixtures = []

        def consider(mc, note):
            key = (tuple(mc.flips), tuple(sorted(mc.relabeling.items())))
            if key in encodings:
                return False
            try:
                ci = induced_iso(mc, sv.slice)
            except EscapesUniverseError:
                return False
            report = full_report(ci, sv)
            assert report == [], (name, note, report[:2])
            encodings.add(key)
            record = mc.to_json()
            record["name"] = "mc_%02d" % len(fixtures)
            record["note"] = note
            fixtures.append(record)
            return True

        consider(MappingClass.identity(tri), "identity")
        for i, mc in enumerate(triangulation_symmetries(tri)):
            consider(mc, "symmetry_%d" % i)
        attempts = 0
        while len(fixtures) < MAPPING_FIXTURES_PER_SURFACE and attempts < 4000:
            attempts += 1
            walk = rng.choice([3, 4, 5, 6, 7, 8])
            consider(random_mapping_class(tri, rng, walk=walk),
                     "walk%d_attempt%d" % (walk, attempts))
            if len(fixtures) >= 2 and attempts % 2 == 0:
                a = fixtures[rng.randrange(len(fixtures))]
                b = fixtures[rng.randrange(len(fixtures))]
                mca = MappingClass.from_json(tri, a)
                mcb = MappingClass.from_json(tri, b)
                consider(mca.compose(mcb),
                         "compose_%s_%s" % (a["name"], b["name"]))
        assert len(fixtures) >= 20, (name, len(fixtures))
        dump(fixtures, "fixtures", "mapping", "%s.json" % name)
        print("  %s: %d mapping fixtures (%d attempts)"
              % (name, len(fixtures), attempts))


def write_named_curves(surveys):
    tri5 = datamod.SURFACE_BUILDERS["S0_5"]()
    tri6 = datamod.SURFACE_BUILDERS["S0_6"]()
    tri8 = datamod.SURFACE_BUILDERS["S0_8"]()

    named = {
        "S0_5": {
            "encloses_12": list(block_vector(tri5, 5, {1, 2})),
            "encloses_45": list(block_vector(tri5, 5, {4, 5})),
        },
        "S0_6": {
            "c1": list(block_vector(tri6, 6, {1, 2})),
            "c2": list(block_vector(tri6, 6, {1, 2, 3})),
            "c3": list(block_vector(tri6, 6, {5, 6})),
        },
        "S0_8": {
            "a": list(block_vector(tri8, 8, {1, 2, 3})),
            "b": list(block_vector(tri8, 8, {1, 2, 3, 4})),
            "b_prime": list(block_vector(tri8, 8, {1, 2, 3, 4, 5})),
        },
    }

    # first separating-anchored pants triple (needs complexity >= 3)
    sv6 = surveys["S0_6"]
    triple = sv6.anchored_triples()[0]
    vec6 = sv6.universe.vectors
    for label, c in zip(("triple_a", "triple_b", "triple_c"), triple):
        named["S0_6"][label] = list(vec6[c])

    # first shipped peripheral pair on the twice-punctured torus
    sv = surveys["S1_2"]
    pair = sv.peripheral_pairs()[0]
    vec = sv.universe.vectors
    named["S1_2"] = {
        "capture": list(genus_capture_multicurve(sv.triangulation)[0]),
        "peripheral_a": list(vec[pair[0]]),
        "peripheral_b": list(vec[pair[1]]),
    }
    cap2 = genus_capture_multicurve(surveys["S2_1"].triangulation)
    named["S2_1"] = {
        "capture_1": list(cap2[0]),
        "capture_2": list(cap2[1]),
    }
    dump(named, "fixtures", "named_curves.json")


def negative_world(record):
    tri = datamod.SURFACE_BUILDERS[record["surface"]]()
    if record["mode"] == "universe":
        uni = CurveUniverse.enumerate(tri, record["bound"])
    else:
        vectors = sorted(tuple(w) for w in record["curves"])
        uni = CurveUniverse(tri, max(sum(w) for w in vectors), vectors)
    gs = GraphSlice.build(uni)
    swaps = [(uni.id_by_curve(tuple(wa)), uni.id_by_curve(tuple(wb)))
             for wa, wb in record["swap_curves"]]
    return PantsSurvey(gs), CandidateIso.from_transpositions(gs, swaps)


def write_negative_fixtures():
    tri6 = datamod.SURFACE_BUILDERS["S0_6"]()
    tri8 = datamod.SURFACE_BUILDERS["S0_8"]()
    u = list(block_vector(tri6, 6, {1, 2}))
    v = list(block_vector(tri6, 6, {1, 2, 3}))
    a = list(block_vector(tri8, 8, {1, 2, 3}))
    b = list(block_vector(tri8, 8, {1, 2, 3, 4, 5}))
    x = list(block_vector(tri8, 8, {1, 2, 3, 4, 5, 6}))
    fixtures = [
        {
            "name": "edge_swap_S0_6",
            "designated": "edge-preservation",
            "mode": "universe",
            "surface": "S0_6",
            "bound": BOUNDS["S0_6"],
            "swap_curves": [[u, v]],
        },
        {
            "name": "class_swap_S0_6",
            "designated": "class-preservation",
            "mode": "curves",
            "surface": "S0_6",
            "curves": [u, v],
            "swap_curves": [[u, v]],
        },
        {
            "name": "peripheral_swap_S0_8",
            "designated": "peripheral-preservation",
            "mode": "curves",
            "surface": "S0_8",
            "curves": [a, b, x],
            "swap_curves": [[a, b]],
        },
    ]
    for record in fixtures:
        sv, ci = negative_world(record)
        failed = failed_checks(full_report(ci, sv))
        assert failed and failed[0] == record["designated"], (record["name"], failed)
        if record["mode"] == "curves":
            assert failed == [record["designated"]], (record["name"], failed)
        print("  %s fails %s" % (record["name"], failed))
    dump(fixtures, "fixtures", "negative.json")


def write_restriction_fixture():
    tri8 = datamod.SURFACE_BUILDERS["S0_8"]()
    bound = 10
    inner = block_vector(tri8, 8, {1, 2, 3})
    inside = block_vector(tri8, 8, {2, 3})
    outside = block_vector(tri8, 8, {5, 6})
    record = {
        "surface": "S0_8",
        "bound": bound,
        "inner": [list(inner)],
        "inner_surface": [0, 3, 1],
        "negative_swap": [[list(inside), list(outside)]],
    }
    uni = CurveUniverse.enumerate(tri8, bound)
    gs = GraphSlice.build(uni)
    stype = SurfaceType(0, 3, 1)
    inner_ids = [uni.id_by_curve(inner)]
    assert check_restriction(CandidateIso.identity(gs), inner_ids, stype)
    swaps = [(uni.id_by_curve(inside), uni.id_by_curve(outside))]
    bad = CandidateIso.from_transpositions(gs, swaps)
    assert not check_restriction(bad, inner_ids, stype)
    print("  restriction fixture verified (identity true, swap false)")
    dump(record, "fixtures", "restriction.json")


def write_exhaustion_fixtures():
    tri12 = datamod.SURFACE_BUILDERS["S0_12"]()
    tri2 = datamod.SURFACE_BUILDERS["S2_1"]()
    b1 = list(block_vector(tri12, 12, {1, 2}))
    b2 = list(block_vector(tri12, 12, {1, 2, 3, 4, 5}))
    b2_far = list(block_vector(tri12, 12, {6, 7, 8}))
    b2_wide = list(block_vector(tri12, 12, {1, 2, 3, 4, 5, 6, 7}))
    nonsep = next(w for w in CurveUniverse.enumerate(tri2, 6).vectors
                  if classify_separation(tri2, w) == NONSEPARATING)

    def stage(surface, boundary, complements, flags):
        return {"surface": list(surface), "boundary": boundary,
                "complement_pieces": [list(s) for s in complements],
                "infinite_flags": flags}

    fixtures = [
        {
            "name": "valid_two_stage",
            "surface": "S0_12",
            "expect": [],
            "stages": [
                stage((0, 2, 1), [b1], [(0, 10, 1)], [True]),
                stage((0, 5, 1), [b2], [(0, 7, 1)], [True]),
            ],
        },
        {
            "name": "violates_finite_types",
            "surface": "S0_12",
            "expect": ["finite-types"],
            "stages": [
                stage((0, 2, 1), [b1], [(0, 9, 1)], [True]),
                stage((0, 5, 1), [b2], [(0, 7, 1)], [True]),
            ],
        },
        {
            "name": "violates_nesting",
            "surface": "S0_12",
            "expect": ["nesting"],
            "stages": [
                stage((0, 2, 1), [b1], [(0, 10, 1)], [True]),
                stage((0, 3, 1), [b2_far], [(0, 9, 1)], [True]),
            ],
        },
        {
            "name": "violates_separating",
            "surface": "S2_1",
            "expect": ["boundary-curves"],
            "stages": [
                stage((1, 1, 2), [list(nonsep)], [], []),
            ],
        },
        {
            "name": "violates_complexity",
            "surface": "S0_12",
            "expect": ["complement-complexity"],
            "stages": [
                stage((0, 2, 1), [b1], [(0, 10, 1)], [True]),
                stage((0, 7, 1), [b2_wide], [(0, 5, 1)], [True]),
            ],
        },
    ]
    for record in fixtures:
        tri = datamod.SURFACE_BUILDERS[record["surface"]]()
        descriptor = ExhaustionDescriptor(tri, [
            ExhaustionStage(SurfaceType(*s["surface"]),
                            [tuple(w) for w in s["boundary"]],
                            [SurfaceType(*c) for c in s["complement_pieces"]],
                            s["infinite_flags"])
            for s in record["stages"]])
        got = sorted({r["check"] for r in validate_exhaustion(descriptor)})
        assert got == sorted(record["expect"]), (record["name"], got)
        print("  %s -> %s" % (record["name"], got or "valid"))
    dump({"fixtures": fixtures}, "fixtures", "exhaustion.json")


def main():
    os.makedirs(DATA, exist_ok=True)
    write_triangulations()
    write_defaults()
    print("building surveys for mapping fixtures ...")
    surveys = surveys_for(TEST_SURFACES)
    write_mapping_fixtures(surveys)
    write_named_curves(surveys)
    write_negative_fixtures()
    write_restriction_fixture()
    write_exhaustion_fixtures()
    print("data tree rebuilt OK")


if __name__ == "__main__":
    main()

"""Command-line interface: enumeration, classification, verification.

Shipped surfaces go by symbolic names (S0_4 ... S2_1) bound to
reference triangulation files; any other triangulation can be passed
as a JSON path.  All outputs are deterministic for fixed flags: no
timestamps, no wall-clock, no unordered iteration leaks.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import os
import sys

from . import data as datamod
from .cutting import classify_separation
from .errors import EscapesUniverseError, InsufficientDataError
from .graphs import GraphSlice, to_dot
from .harness import (CandidateIso, ExhaustionDescriptor, ExhaustionStage,
                      check_restriction, failed_checks, full_report,
                      induced_iso, validate_exhaustion)
from .mapping import MappingClass
from .pants import PantsSurvey
from .surface import SurfaceType
from .triangulation import Triangulation
from .universe import CurveUniverse


def _load_triangulation(parser, args):
    if args.triangulation:
        with open(args.triangulation) as fh:
            return Triangulation.from_json(json.load(fh)), None
    if not args.surface:
        parser.error("either --surface or --triangulation is required")
    try:
        return datamod.reference_triangulation(args.surface), args.surface
    except KeyError as exc:
        parser.error(str(exc))


def _resolve_bound(parser, args, name):
    if args.bound is not None:
        if args.bound < 1:
            parser.error("--bound must be at least 1")
        return args.bound
    if name is not None:
        return datamod.default_bound(name)
    parser.error("--bound is required with --triangulation")


def _cache_path(name, bound):
    return datamod.data_path("universes", "%s_L%d.jsonl" % (name, bound))


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(parser, args):
    tri, name = _load_triangulation(parser, args)
    bound = _resolve_bound(parser, args, name)
    universe = CurveUniverse.enumerate(tri, bound, workers=args.workers)
    if args.format == "json":
        lines = [json.dumps(universe.header(), sort_keys=True)]
        lines += [json.dumps({"id": k, "weights": list(v)})
                  for k, v in enumerate(universe.vectors)]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "dot":
        gslice = GraphSlice.build(universe)
        _emit(args, to_dot(gslice.adjacency, name or "slice"))
    else:
        lines = ["%d %s" % (k, " ".join(str(x) for x in v))
                 for k, v in enumerate(universe.vectors)]
        _emit(args, "\n".join(lines) + "\n")
    if name is not None:
        path = _cache_path(name, bound)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        universe.save(path)
    print("count %d" % len(universe), file=sys.stderr)
    return 0


def cmd_classify(parser, args):
    tri, name = _load_triangulation(parser, args)
    bound = _resolve_bound(parser, args, name)
    if name is not None:
        path = _cache_path(name, bound)
        if not os.path.exists(path):
            parser.error("no universe cache for %s at bound %d; "
                         "run `curvekit enumerate --surface %s --bound %d` first"
                         % (name, bound, name, bound))
        universe = CurveUniverse.load(tri, path)
    else:
        universe = CurveUniverse.enumerate(tri, bound)
    survey = PantsSurvey(GraphSlice.build(universe))
    rows = []
    for c in range(len(universe)):
        topological = survey.classify_separation(c)
        try:
            simplicial = survey.classify_simplicial(c)
            agreement = simplicial == topological
        except InsufficientDataError:
            simplicial = "insufficient-data"
            agreement = None
        rows.append({
            "id": c,
            "weights": list(universe.vectors[c]),
            "topological": topological,
            "simplicial": simplicial,
            "agreement": agreement,
        })
    if args.format == "json":
        doc = {"surface": name, "bound": bound, "seed": args.seed, "rows": rows}
        _emit(args, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        lines = ["id weights topological simplicial agreement"]
        for r in rows:
            lines.append("%d %s %s %s %s"
                         % (r["id"], ",".join(str(x) for x in r["weights"]),
                            r["topological"], r["simplicial"],
                            {True: "yes", False: "NO", None: "n/a"}[r["agreement"]]))
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _negative_world(record):
    tri = datamod.reference_triangulation(record["surface"])
    if record["mode"] == "universe":
        universe = CurveUniverse.enumerate(tri, record["bound"])
    else:
        vectors = sorted(tuple(w) for w in record["curves"])
        universe = CurveUniverse(tri, max(sum(w) for w in vectors), vectors)
    gslice = GraphSlice.build(universe)
    swaps = [(universe.id_by_curve(tuple(wa)), universe.id_by_curve(tuple(wb)))
             for wa, wb in record["swap_curves"]]
    return PantsSurvey(gslice), CandidateIso.from_transpositions(gslice, swaps)


def _descriptor_from_record(record):
    tri = datamod.reference_triangulation(record["surface"])
    return ExhaustionDescriptor(tri, [
        ExhaustionStage(SurfaceType(*s["surface"]),
                        [tuple(w) for w in s["boundary"]],
                        [SurfaceType(*c) for c in s["complement_pieces"]],
                        s["infinite_flags"])
        for s in record["stages"]])


def _mapping_suite(surfaces, raw_fixture=None):
    records = []
    for name in surfaces:
        tri = datamod.reference_triangulation(name)
        bound = datamod.default_bound(name)
        fixtures = datamod.mapping_fixtures(name)
        if raw_fixture is not None:
            fixtures = [(fid, mc) for fid, mc in fixtures
                        if "%s/%s" % (name, fid) == raw_fixture or fid == raw_fixture]
            if not fixtures:
                continue
        universe = CurveUniverse.enumerate(tri, bound)
        survey = PantsSurvey(GraphSlice.build(universe))
        for fid, mc in fixtures:
            try:
                ciso = induced_iso(mc, survey.slice)
                report = full_report(ciso, survey)
                status = "pass" if report == [] else "fail"
                details = [v["check"] for v in report]
            except EscapesUniverseError as exc:
                status = "fail"
                details = ["escapes-universe: %s" % exc]
            records.append({"check": "mapping-fixture",
                            "fixture": "%s/%s" % (name, fid),
                            "status": status, "details": details})
    return records


def _negative_suite(raw_fixture=None):
    records = []
    for record in datamod.negative_fixtures():
        if raw_fixture is not None and record["name"] != raw_fixture:
            continue
        survey, ciso = _negative_world(record)
        failed = failed_checks(full_report(ciso, survey))
        if raw_fixture is not None:
            records.append({"check": "negative-fixture",
                            "fixture": record["name"],
                            "status": "fail" if failed else "pass",
                            "details": failed})
            continue
        expected = record["designated"]
        ok = bool(failed) and failed[0] == expected
        records.append({"check": "negative-fixture",
                        "fixture": record["name"],
                        "status": "pass" if ok else "fail",
                        "details": ["fails %s as designated" % expected] if ok
                        else ["expected first failure %s, got %s"
                              % (expected, failed)]})
    return records


def _exhaustion_suite(raw_fixture=None):
    records = []
    for record in datamod.exhaustion_fixtures()["fixtures"]:
        if raw_fixture is not None and record["name"] != raw_fixture:
            continue
        descriptor = _descriptor_from_record(record)
        violations = validate_exhaustion(descriptor)
        got = sorted({v["check"] for v in violations})
        if raw_fixture is not None:
            records.append({"check": "exhaustion",
                            "fixture": record["name"],
                            "status": "fail" if violations else "pass",
                            "details": got})
            continue
        ok = got == sorted(record["expect"])
        records.append({"check": "exhaustion",
                        "fixture": record["name"],
                        "status": "pass" if ok else "fail",
                        "details": ["violates exactly %s" % (record["expect"] or "nothing")]
                        if ok else ["expected %s, got %s" % (record["expect"], got)]})
    return records


def _restriction_suite(raw_fixture=None):
    record = datamod.restriction_fixture()
    name = "restriction_%s" % record["surface"]
    if raw_fixture is not None and raw_fixture != name:
        return []
    tri = datamod.reference_triangulation(record["surface"])
    universe = CurveUniverse.enumerate(tri, record["bound"])
    gslice = GraphSlice.build(universe)
    stype = SurfaceType(*record["inner_surface"])
    inner_ids = [universe.id_by_curve(tuple(w)) for w in record["inner"]]
    good = check_restriction(CandidateIso.identity(gslice), inner_ids, stype)
    swaps = [(universe.id_by_curve(tuple(wa)), universe.id_by_curve(tuple(wb)))
             for wa, wb in record["negative_swap"]]
    bad = check_restriction(CandidateIso.from_transpositions(gslice, swaps),
                            inner_ids, stype)
    ok = good and not bad
    return [{"check": "restriction",
             "fixture": name,
             "status": "pass" if ok else "fail",
             "details": ["identity inside-stays-inside %s" % good,
                         "constructed escape detected %s" % (not bad)]}]


def cmd_verify(parser, args):
    if args.surface and args.surface not in datamod.surface_names():
        parser.error("unknown surface %r" % args.surface)
    raw = args.fixture
    if raw is not None:
        records = (_mapping_suite(["S0_5", "S0_6", "S1_2", "S2_1"], raw)
                   + _negative_suite(raw) + _exhaustion_suite(raw)
                   + _restriction_suite(raw))
        if not records:
            parser.error("unknown fixture %r" % raw)
    else:
        surfaces = [args.surface] if args.surface else ["S0_5", "S0_6", "S1_2", "S2_1"]
        records = _mapping_suite(surfaces)
        if args.all or not args.surface:
            records += _negative_suite() + _exhaustion_suite() + _restriction_suite()
    records.sort(key=lambda r: (r["check"], r["fixture"]))
    doc = {"command": "verify", "seed": args.seed, "records": records}
    _emit(args, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    failures = [r for r in records if r["status"] != "pass"]
    print("verify: %d checks, %d failures" % (len(records), len(failures)),
          file=sys.stderr)
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvekit",
        description="curves, curve-graph slices, and rigidity checks on punctured surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, workers=False):
        p.add_argument("--surface", help="symbolic surface name (e.g. S0_5)")
        p.add_argument("--triangulation", help="path to a triangulation JSON file")
        p.add_argument("--bound", type=int, help="weight bound L")
        p.add_argument("--format", choices=["json", "dot", "text"], default="json")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed recorded in reports")
        if workers:
            p.add_argument("--workers", type=int, default=1,
                           help="partition the enumeration root (same output)")

    p_enum = sub.add_parser("enumerate", help="enumerate the curve universe")
    common(p_enum, workers=True)

    p_cls = sub.add_parser("classify", help="classify every curve in a cached universe")
    common(p_cls)

    p_ver = sub.add_parser("verify", help="run fixture verification suites")
    common(p_ver)
    p_ver.add_argument("--fixture", help="run one fixture raw and report its violations")
    p_ver.add_argument("--all", action="store_true",
                       help="run every suite (the acceptance gate)")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate":
        return cmd_enumerate(parser, args)
    if args.command == "classify":
        return cmd_classify(parser, args)
    return cmd_verify(parser, args)


if __name__ == "__main__":
    sys.exit(main())

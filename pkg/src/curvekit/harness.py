"""Verification harness for candidate curve-graph isomorphisms.

A candidate isomorphism is a vertex bijection between two graph
slices.  Geometric candidates come from mapping classes; the checks
here confirm that every such candidate preserves edges and the whole
ladder of invariants (pants decompositions, adjacency graphs, curve
classes, peripheral pairs, pants-bounding triples, genus), and that
constructed non-geometric bijections fail exactly where they should.
"""

from .cutting import NONSEPARATING, classify_separation, cut_along_detailed
from .errors import EscapesUniverseError
from .overlay import are_disjoint
from .pants import ONE_HOLED_TORUS
from .surface import SurfaceType

# Pipeline order: a fixture designed to break one invariant must pass
# everything that runs before it.
CHECK_ORDER = (
    "edge-preservation",
    "pants-preservation",
    "adjacency-isomorphism",
    "class-preservation",
    "peripheral-preservation",
    "pants-triples",
    "genus-capture",
)


def check_rank(name):
    return CHECK_ORDER.index(name)


class CandidateIso:
    """A bijection between the vertex sets of two slices."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)
        src = set(source.adjacency)
        tgt = set(target.adjacency)
        if set(self.mapping) != src or set(self.mapping.values()) != tgt:
            raise ValueError("mapping is not a bijection between the slices")

    @classmethod
    def identity(cls, gslice):
        return cls(gslice, gslice, {v: v for v in gslice.adjacency})

    @classmethod
    def from_transpositions(cls, gslice, swaps):
        mapping = {v: v for v in gslice.adjacency}
        for a, b in swaps:
            mapping[a], mapping[b] = mapping[b], mapping[a]
        return cls(gslice, gslice, mapping)

    def __getitem__(self, c):
        return self.mapping[c]

    def image_ids(self, ids):
        return tuple(sorted(self.mapping[c] for c in ids))

    def inverse(self):
        return CandidateIso(self.target, self.source,
                            {v: k for k, v in self.mapping.items()})

    def compose(self, first):
        """self after first."""
        assert first.target is self.source, "composition slices do not match"
        return CandidateIso(first.source, self.target,
                            {k: self.mapping[v] for k, v in first.mapping.items()})


def induced_iso(mc, gslice, target=None):
    """The vertex map c -> mc(c) on a universe, as a CandidateIso.

    Every image must stay within the (target) universe bound;
    otherwise the escaping source ids are reported.
    """
    target = target or gslice
    universe, tuniverse = gslice.universe, target.universe
    mapping, escapees = {}, []
    for c, w in enumerate(universe.vectors):
        img = tuple(mc.apply(w))
        if img in tuniverse._ids:
            mapping[c] = tuniverse._ids[img]
        else:
            escapees.append(c)
    if escapees:
        raise EscapesUniverseError(
            "%d curves map outside the weight bound: %r"
            % (len(escapees), escapees[:10]), escapees)
    return CandidateIso(gslice, target, mapping)


def check_simplicial_iso(ciso):
    """Offending pairs where the map or its inverse breaks an edge."""
    violations = []
    src, tgt = ciso.source, ciso.target
    ids = sorted(src.adjacency)
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            before = src.has_edge(a, b)
            after = tgt.has_edge(ciso.mapping[a], ciso.mapping[b])
            if before != after:
                violations.append({
                    "check": "edge-preservation",
                    "pair": (a, b),
                    "image": (ciso.mapping[a], ciso.mapping[b]),
                    "edge_before": before,
                    "edge_after": after,
                })
    return violations


def verify_invariant_preservation(ciso, source_survey, target_survey=None):
    """Run the invariant ladder; an empty report means full preservation.

    Checks run in CHECK_ORDER after the edge check: decompositions map
    to decompositions, adjacency graphs are isomorphic under the
    induced map, curve classes are unchanged, peripheral pairs map to
    peripheral pairs, pants-bounding triples keep bounding pants, and
    the genus-capturing multicurve maps to a genus-capturing
    multicurve.
    """
    target_survey = target_survey or source_survey
    assert source_survey.slice is ciso.source, "survey does not match source slice"
    assert target_survey.slice is ciso.target, "survey does not match target slice"
    report = []

    # pants decompositions map to pants decompositions
    images = {}
    for idx, P in enumerate(source_survey.decompositions):
        image = ciso.image_ids(P.ids)
        tgt_idx = target_survey.index_of_ids(image)
        images[idx] = tgt_idx
        if tgt_idx is None:
            report.append({
                "check": "pants-preservation",
                "decomposition": P.ids,
                "image": image,
            })

    # induced maps between adjacency graphs are isomorphisms
    for idx, P in enumerate(source_survey.decompositions):
        if images[idx] is None:
            continue
        G = source_survey.graph(idx)
        H = target_survey.graph(images[idx])
        mapped = {(min(ciso.mapping[a], ciso.mapping[b]),
                   max(ciso.mapping[a], ciso.mapping[b]))
                  for a in G.adjacency for b in G.adjacency[a] if a < b}
        actual = {(a, b) for a in H.adjacency for b in H.adjacency[a] if a < b}
        if mapped != actual:
            report.append({
                "check": "adjacency-isomorphism",
                "decomposition": P.ids,
                "missing": sorted(mapped - actual),
                "extra": sorted(actual - mapped),
            })

    # curve classes are preserved
    for c in sorted(ciso.source.adjacency):
        before = source_survey.classify_separation(c)
        after = target_survey.classify_separation(ciso.mapping[c])
        if before != after:
            report.append({
                "check": "class-preservation",
                "curve": c,
                "image": ciso.mapping[c],
                "before": before,
                "after": after,
            })

    # peripheral pairs map to peripheral pairs
    for a, b in source_survey.peripheral_pairs():
        fa, fb = ciso.mapping[a], ciso.mapping[b]
        if not ciso.target.has_edge(fa, fb):
            continue  # already reported as an edge violation
        if not target_survey.peripheral_topological(fa, fb):
            report.append({
                "check": "peripheral-preservation",
                "pair": (a, b),
                "image": (min(fa, fb), max(fa, fb)),
            })

    # pants-bounding triples keep bounding pants
    for triple in source_survey.anchored_triples():
        image = tuple(sorted(ciso.mapping[c] for c in triple))
        if len(set(image)) != 3:
            continue
        fa, fb, fc = image
        if not (ciso.target.has_edge(fa, fb) and ciso.target.has_edge(fa, fc)
                and ciso.target.has_edge(fb, fc)):
            continue  # already reported as an edge violation
        if not target_survey.pants_triple(fa, fb, fc):
            report.append({
                "check": "pants-triples",
                "triple": triple,
                "image": image,
            })

    # the genus-capturing multicurve maps to one
    source_ids = source_survey.genus_capture_ids()
    genus = ciso.source.universe.triangulation.surface_type().genus
    if source_ids:
        image_vectors = [ciso.target.universe.vectors[ciso.mapping[c]]
                         for c in source_ids]
        tri = ciso.target.universe.triangulation
        pieces = cut_along_detailed(tri, image_vectors).pieces
        tori = [p for p in pieces if p.surface == ONE_HOLED_TORUS]
        rest = [p for p in pieces if p.surface != ONE_HOLED_TORUS]
        if len(tori) != genus or any(p.surface.genus != 0 for p in rest):
            report.append({
                "check": "genus-capture",
                "ids": tuple(source_ids),
                "image_pieces": sorted(str(p.surface) for p in pieces),
            })
    report.sort(key=lambda v: check_rank(v["check"]))
    return report


def full_report(ciso, source_survey, target_survey=None):
    """Edge check plus the invariant ladder, in pipeline order."""
    violations = check_simplicial_iso(ciso)
    violations += verify_invariant_preservation(ciso, source_survey, target_survey)
    violations.sort(key=lambda v: check_rank(v["check"]))
    return violations


def failed_checks(report):
    """The distinct check names in a report, in pipeline order."""
    return sorted({v["check"] for v in report}, key=check_rank)


def check_restriction(ciso, inner_ids, inner_surface):
    """Do curves inside a subsurface map inside one matching piece?

    ``inner_ids`` is the boundary multicurve of a subsurface of the
    source, ``inner_surface`` the type of the piece it bounds (which
    must pick out a unique complement piece).  True when every
    universe curve contained in that piece maps to a curve contained
    in a single piece of the same type on the target side.
    """
    src_u, tgt_u = ciso.source.universe, ciso.target.universe
    inner_ids = tuple(sorted(inner_ids))
    src_cut = cut_along_detailed(src_u.triangulation,
                                 [src_u.vectors[c] for c in inner_ids])
    matching = [i for i, p in enumerate(src_cut.pieces)
                if p.surface == inner_surface]
    assert len(matching) == 1, (
        "inner surface %s does not pick a unique piece" % (inner_surface,))
    piece = matching[0]
    inside = []
    for x in sorted(ciso.source.adjacency):
        if x in inner_ids:
            continue
        if not all(ciso.source.has_edge(x, c) for c in inner_ids):
            continue
        if src_cut.piece_containing(src_u.vectors[x]) == piece:
            inside.append(x)
    if not inside:
        return True
    image_boundary = [tgt_u.vectors[ciso.mapping[c]] for c in inner_ids]
    tgt_cut = cut_along_detailed(tgt_u.triangulation, image_boundary)
    target_piece = None
    for x in inside:
        w = tgt_u.vectors[ciso.mapping[x]]
        try:
            piece_x = tgt_cut.piece_containing(w)
        except ValueError:
            return False  # image meets the image boundary
        if piece_x is None:
            return False  # image became boundary-parallel
        if target_piece is None:
            target_piece = piece_x
        elif piece_x != target_piece:
            return False
    return tgt_cut.pieces[target_piece].surface == inner_surface


class ExhaustionStage:
    """One stage: a subsurface, its boundary curves, and its complement."""

    def __init__(self, surface, boundary, complement_pieces, infinite_flags):
        self.surface = surface
        self.boundary = [tuple(w) for w in boundary]
        self.complement_pieces = list(complement_pieces)
        self.infinite_flags = list(infinite_flags)
        assert len(self.infinite_flags) == len(self.complement_pieces), (
            "one infinite-type flag per complement piece")

    def to_json(self):
        return {
            "surface": self.surface.to_json(),
            "boundary": [list(w) for w in self.boundary],
            "complement_pieces": [s.to_json() for s in self.complement_pieces],
            "infinite_flags": self.infinite_flags,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            SurfaceType.from_json(obj["surface"]),
            [tuple(w) for w in obj["boundary"]],
            [SurfaceType.from_json(s) for s in obj["complement_pieces"]],
            list(obj["infinite_flags"]),
        )


class ExhaustionDescriptor:
    """An ordered list of nested stages with separating boundaries."""

    def __init__(self, triangulation, stages):
        self.triangulation = triangulation
        self.stages = list(stages)
        assert self.stages, "a descriptor needs at least one stage"

    def to_json(self):
        return {"stages": [s.to_json() for s in self.stages]}

    @classmethod
    def from_json(cls, triangulation, obj):
        return cls(triangulation, [ExhaustionStage.from_json(s) for s in obj["stages"]])


def validate_exhaustion(descriptor):
    """Check the four computable nesting conditions; the fifth symbolically.

    Returns a list of violations, empty for a valid descriptor
    (condition 1: declared finite types match the actual cut pieces;
    condition 2: each stage lies inside the next stage's subsurface;
    condition 3: boundary curves pairwise disjoint and separating;
    condition 4: declared complement pieces have complexity >= 4).
    Condition 5 — complement pieces of infinite type — cannot be
    certified by any finite computation, so it is checked only against
    the declared flags: a flag declaring a finite-type complement is a
    violation marked ``"symbolic": True``.
    """
    tri = descriptor.triangulation
    report = []
    cuts = []
    for i, stage in enumerate(descriptor.stages):
        cut = cut_along_detailed(tri, stage.boundary)
        cuts.append(cut)
        declared = sorted([stage.surface] + stage.complement_pieces,
                          key=lambda s: (s.genus, s.punctures, s.boundary))
        actual = sorted([p.surface for p in cut.pieces],
                        key=lambda s: (s.genus, s.punctures, s.boundary))
        if declared != actual:
            report.append({
                "check": "finite-types",
                "stage": i,
                "status": "fail",
                "declared": [str(s) for s in declared],
                "actual": [str(s) for s in actual],
            })

    for i in range(len(descriptor.stages) - 1):
        inner, outer = descriptor.stages[i], descriptor.stages[i + 1]
        cut = cuts[i + 1]
        pieces = set()
        for w in inner.boundary:
            try:
                pieces.add(cut.piece_containing(w))
            except ValueError:
                pieces.add(None)
        good = (len(pieces) == 1 and None not in pieces
                and cut.pieces[next(iter(pieces))].surface == outer.surface)
        if not good:
            report.append({
                "check": "nesting",
                "stage": i,
                "status": "fail",
                "detail": "stage %d boundary does not sit inside stage %d's subsurface"
                          % (i, i + 1),
            })

    all_curves = []
    for stage in descriptor.stages:
        for w in stage.boundary:
            if w not in all_curves:
                all_curves.append(w)
    for i, wa in enumerate(all_curves):
        for wb in all_curves[i + 1:]:
            if not are_disjoint(tri, wa, wb):
                report.append({
                    "check": "boundary-curves",
                    "status": "fail",
                    "detail": "boundary curves intersect",
                    "pair": [list(wa), list(wb)],
                })
    for w in all_curves:
        if classify_separation(tri, w) == NONSEPARATING:
            report.append({
                "check": "boundary-curves",
                "status": "fail",
                "detail": "boundary curve is nonseparating",
                "curve": list(w),
            })

    for i, stage in enumerate(descriptor.stages):
        for s in stage.complement_pieces:
            if s.complexity() < 4:
                report.append({
                    "check": "complement-complexity",
                    "stage": i,
                    "status": "fail",
                    "piece": str(s),
                    "complexity": s.complexity(),
                })

    for i, stage in enumerate(descriptor.stages):
        if not all(stage.infinite_flags):
            report.append({
                "check": "infinite-complements",
                "stage": i,
                "status": "fail",
                "symbolic": True,
                "flags": list(stage.infinite_flags),
            })
    return report


def exhaustion_violations(report):
    return [r for r in report if r["status"] == "fail"]


def boundary_match(ciso, piece_multicurves):
    """Compare the piece types cut out by matching boundary multicurves.

    The multicurves jointly decompose the source; for each one, the
    piece it bounds on the source side must have the same type as the
    piece its image bounds on the target side.
    """
    src_u, tgt_u = ciso.source.universe, ciso.target.universe
    groups = [tuple(sorted(m)) for m in piece_multicurves]
    all_ids = sorted({c for m in groups for c in m})
    image_ids = [ciso.mapping[c] for c in all_ids]
    for i, a in enumerate(image_ids):
        for b in image_ids[i + 1:]:
            if not are_disjoint(tgt_u.triangulation,
                                tgt_u.vectors[a], tgt_u.vectors[b]):
                raise ValueError(
                    "image boundary curves intersect; candidate is not simplicial")
    src_cut = cut_along_detailed(src_u.triangulation,
                                 [src_u.vectors[c] for c in all_ids])
    tgt_cut = cut_along_detailed(tgt_u.triangulation,
                                 [tgt_u.vectors[c] for c in image_ids])
    report = []
    for j, m in enumerate(groups):
        src_pieces = [p for p in src_cut.pieces
                      if {all_ids[k] for k in p.boundary} == set(m)]
        img = {ciso.mapping[c] for c in m}
        tgt_pieces = [p for p in tgt_cut.pieces
                      if {image_ids[k] for k in p.boundary} == img]
        entry = {"piece": j, "boundary": m}
        if len(src_pieces) != 1 or len(tgt_pieces) != 1:
            entry["status"] = "unmatched"
            entry["source_count"] = len(src_pieces)
            entry["target_count"] = len(tgt_pieces)
        else:
            s, t = src_pieces[0].surface, tgt_pieces[0].surface
            entry["source"] = str(s)
            entry["target"] = str(t)
            entry["status"] = "match" if s == t else "mismatch"
        report.append(entry)
    return report


def find_truncation_automorphisms(survey, budget=200000):
    """Slice automorphisms that break an invariant, as truncation artifacts.

    Enumerates automorphisms of the slice by the same backtracking the
    isomorphism search uses, checks each against the invariant ladder,
    and returns the violating ones.  Finding any is a statement about
    the truncated universe, never about geometric maps.
    """
    from .graphs import _refine_colors

    g = {v: set(ns) for v, ns in survey.slice.adjacency.items()}
    colors = _refine_colors(g, {v: 0 for v in g})
    order = sorted(g, key=lambda v: (colors[v], v))
    found = []
    nodes = [0]

    def extend(k, mapping, used):
        nodes[0] += 1
        if nodes[0] > budget:
            return
        if k == len(order):
            ciso = CandidateIso(survey.slice, survey.slice, dict(mapping))
            if full_report(ciso, survey):
                found.append(ciso)
            return
        v = order[k]
        for w in sorted(g):
            if w in used or colors[w] != colors[v]:
                continue
            if any((u in g[v]) != (mapping[u] in g[w]) for u in mapping):
                continue
            mapping[v] = w
            used.add(w)
            extend(k + 1, mapping, used)
            del mapping[v]
            used.discard(w)

    extend(0, {}, set())
    return found

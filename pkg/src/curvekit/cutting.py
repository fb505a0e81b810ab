"""Cutting a surface along disjoint curves, and separation classifiers.

Cutting is computed combinatorially: the multicurve decomposes every
triangle into cells bounded by corner arcs and pieces of the triangle
boundary; cells glue across triangulation edges, and the resulting
unions are the complementary pieces.  Each piece knows its topological
type (with the curve sides appearing as boundary circles), the
punctures it contains, and which input curve bounds it on which side.

An independent separation test comes from homology: the pairing of a
curve with a cycle basis of the triangulation's 1-skeleton, over Z/2,
vanishes exactly for separating curves.
"""

from __future__ import annotations

from .normal import edge_endpoints, trace_detailed, validate_normal
from .overlay import _TriangleCells, _UnionFind
from .surface import SurfaceType


class CutPiece:
    """One complementary piece of a cut, with its boundary bookkeeping.

    ``boundary`` lists the indices of the input curves along the piece's
    boundary circles, one entry per circle (so a curve with the piece on
    both sides appears twice).  ``punctures`` are the ambient punctures
    lying inside the piece.
    """

    __slots__ = ("surface", "punctures", "boundary")

    def __init__(self, surface, punctures, boundary):
        self.surface = surface
        self.punctures = frozenset(punctures)
        self.boundary = tuple(sorted(boundary))

    def sort_key(self):
        return (
            self.surface.genus,
            self.surface.punctures,
            self.surface.boundary,
            tuple(sorted(self.punctures)),
            self.boundary,
        )

    def __repr__(self):
        return "CutPiece(%s, punctures=%s, boundary=%s)" % (
            self.surface,
            sorted(self.punctures),
            list(self.boundary),
        )


class CutResult:
    """The decomposition of a surface along a disjoint family of curves."""

    def __init__(self, tri, vectors):
        vectors = [tuple(v) for v in vectors]
        for w in vectors:
            problems = validate_normal(tri, w)
            if problems:
                raise ValueError("; ".join(problems))
        self.tri = tri
        self.vectors = vectors
        self._build()

    def _build(self):
        tri = self.tri
        vectors = self.vectors
        if not vectors:
            st = tri.surface_type()
            self.pieces = [CutPiece(st, range(st.punctures), ())]
            self.side_pieces = []
            self._cells = None
            return

        total = tuple(sum(col) for col in zip(*vectors))
        comps = trace_detailed(tri, total)
        remaining = list(range(len(vectors)))
        comp_curve = []
        for comp in comps:
            match = next((k for k in remaining if vectors[k] == comp.weights), None)
            if match is None:
                raise ValueError("curves are not pairwise disjoint")
            remaining.remove(match)
            comp_curve.append(match)
        assert not remaining

        # chord arrangement per triangle (positions are already in the
        # merged coordinates of the total vector; no crossings occur)
        by_triangle = {t: [] for t in range(tri.triangle_count)}
        for ci, comp in enumerate(comps):
            for idx, step in enumerate(comp.steps):
                t, corner, depth, side_in, pos_in, side_out, pos_out = step
                by_triangle[t].append(((ci, idx), side_in[1], pos_in, side_out[1], pos_out))

        cells = {}
        for t in range(tri.triangle_count):
            side_totals = [total[tri.triangles[t][i]] for i in range(3)]
            point_rank = {}
            k = 0
            for i in range(3):
                k += 1
                for m in range(side_totals[i]):
                    point_rank[(i, m)] = k
                    k += 1
            records = [
                (label, point_rank[(si, pi)], point_rank[(so, po)], [])
                for label, si, pi, so, po in sorted(by_triangle[t])
            ]
            cells[t] = _TriangleCells(t, side_totals, records, {})
        self._cells = cells
        self._total = total

        uf = _UnionFind()
        for t in range(tri.triangle_count):
            for f in range(len(cells[t].faces)):
                if f != cells[t].outer:
                    uf.add((t, f))
        glue_pairs = []
        for e in range(tri.edge_count):
            (t1, i1), (t2, i2) = tri.sides_of_edge(e)
            m = total[e]
            for j in range(m + 1):
                f1 = (t1, cells[t1].face_of_segment[(i1, j)])
                f2 = (t2, cells[t2].face_of_segment[(i2, m - j)])
                uf.union(f1, f2)
                glue_pairs.append((f1, f2))

        chi = {}
        punctures = {}
        for t in range(tri.triangle_count):
            for f in range(len(cells[t].faces)):
                if f == cells[t].outer:
                    continue
                r = uf.find((t, f))
                chi[r] = chi.get(r, 0) + 1
                punctures.setdefault(r, set())
            for corner, f in cells[t].face_of_corner.items():
                punctures[uf.find((t, f))].add(tri.vertex_of_corner((t, corner)))
        for f1, _ in glue_pairs:
            chi[uf.find(f1)] -= 1

        # each curve side lies along a single region
        side_region = {}
        for t in range(tri.triangle_count):
            for (label, piece_idx), (left, right) in cells[t].chord_side_faces.items():
                ci = label[0]
                for side_tag, f in (("L", left), ("R", right)):
                    r = uf.find((t, f))
                    prev = side_region.setdefault((ci, side_tag), r)
                    assert prev == r, "curve side touches two regions"

        sides_of_region = {}
        for (ci, side_tag), r in sorted(side_region.items()):
            sides_of_region.setdefault(r, []).append(ci)

        self._uf = uf
        pieces = {}
        for r in sorted(chi):
            boundary = [comp_curve[ci] for ci in sides_of_region.get(r, [])]
            assert boundary, "a complement piece without boundary"
            n = len(punctures[r])
            b = len(boundary)
            chi_bar = chi[r] + n
            g2 = 2 - b - chi_bar
            assert g2 >= 0 and g2 % 2 == 0, "piece invariants are inconsistent"
            pieces[r] = CutPiece(SurfaceType(g2 // 2, n, b), punctures[r], boundary)

        order = sorted(pieces, key=lambda r: pieces[r].sort_key())
        self._piece_of_region = {r: k for k, r in enumerate(order)}
        self.pieces = [pieces[r] for r in order]

        by_curve = {}
        for (ci, side_tag), r in side_region.items():
            by_curve.setdefault(comp_curve[ci], {})[side_tag] = self._piece_of_region[r]
        self.side_pieces = [(by_curve[k]["L"], by_curve[k]["R"]) for k in range(len(vectors))]

        st = tri.surface_type()
        assert sum(p.surface.euler_characteristic() for p in self.pieces) == (
            st.euler_characteristic()
        ), "Euler characteristic is not conserved"
        assert sum(p.surface.punctures for p in self.pieces) == st.punctures
        assert sum(p.surface.boundary for p in self.pieces) == 2 * len(vectors)

    def piece_containing(self, w):
        """Index of the piece a disjoint curve lies in.

        Returns None when the curve is parallel to one of the cut curves
        (it is then isotopic into the pieces on both sides).  Raises
        ValueError when the curve actually meets the cut system.
        """
        w = tuple(w)
        if not self.vectors:
            return 0
        if w in self.vectors:
            return None
        tri = self.tri
        combined = tuple(x + y for x, y in zip(self._total, w))
        comps = trace_detailed(tri, combined)
        got = sorted(c.weights for c in comps)
        if got != sorted(self.vectors + [w]):
            raise ValueError("curve meets the cut system")
        comp = next(c for c in comps if c.weights == w)

        # positions of the located curve's points, per triangle side
        own = {}
        for step in comp.steps:
            t, corner, depth, side_in, pos_in, side_out, pos_out = step
            own.setdefault(side_in, set()).add(pos_in)
            own.setdefault(side_out, set()).add(pos_out)

        t, corner, depth, side_in, pos_in, side_out, pos_out = comp.steps[0]
        below = sum(1 for p in own.get(side_in, ()) if p < pos_in)
        j = pos_in - below
        slot = side_in[1]
        f = self._cells[t].face_of_segment[(slot, j)]
        return self._piece_of_region[self._uf.find((t, f))]


def cut_along_detailed(tri, vectors):
    """Cut the surface along pairwise-disjoint curves."""
    return CutResult(tri, vectors)


def cut_along(tri, vectors):
    """Topological types of the complementary pieces, in a stable order."""
    return [p.surface for p in CutResult(tri, vectors).pieces]


NONSEPARATING = "nonseparating"
OUTER = "outer"
NONOUTER_SEPARATING = "nonouterSeparating"

TWICE_PUNCTURED_DISC = SurfaceType(0, 2, 1)


def classify_separation(tri, w):
    """Classify a curve as nonseparating, outer, or nonouterSeparating."""
    pieces = CutResult(tri, [w]).pieces
    if len(pieces) == 1:
        return NONSEPARATING
    assert len(pieces) == 2, "a simple curve cuts into at most two pieces"
    if any(p.surface == TWICE_PUNCTURED_DISC for p in pieces):
        return OUTER
    return NONOUTER_SEPARATING


def homology_mod2(tri, w):
    """The curve's pairing with a cycle basis of the 1-skeleton, over Z/2.

    The cycles generate the first homology of the closed surface, where
    the mod-2 intersection pairing is perfect, so the result is zero
    exactly when the curve separates.  Cycle order is fixed by the edge
    identifiers, making the vector comparable across curves.
    """
    w = tuple(w)
    root = 0
    parity = {root: 0}
    in_tree = set()
    frontier = [root]
    adj = {v: [] for v in range(tri.vertex_count)}
    for e in range(tri.edge_count):
        u, v = edge_endpoints(tri, e)
        adj[u].append((e, v))
        adj[v].append((e, u))
    while frontier:
        u = frontier.pop(0)
        for e, v in sorted(adj[u]):
            if v not in parity:
                parity[v] = (parity[u] + w[e]) % 2
                in_tree.add(e)
                frontier.append(v)
    assert len(parity) == tri.vertex_count, "1-skeleton is disconnected"

    vec = []
    for e in range(tri.edge_count):
        if e in in_tree:
            continue
        u, v = edge_endpoints(tri, e)
        vec.append((w[e] + parity[u] + parity[v]) % 2)
    return tuple(vec)

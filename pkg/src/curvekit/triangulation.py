"""Ideal triangulations of punctured surfaces.

A triangulation is a list of triangles, each a cyclic triple of edge ids.
Every edge id occurs in exactly two triangle slots; the two occurrences
are glued by the unique orientation-reversing identification, so the
resulting surface is closed and oriented with all vertices at punctures.

Conventions used throughout the package:

* Triangle slots 0, 1, 2 are listed in counterclockwise order.
* Corner ``c`` of a triangle is the corner *opposite* slot ``c``.
* Slot ``i`` runs from corner ``(i+1) % 3`` to corner ``(i+2) % 3`` when
  the boundary is traversed counterclockwise.
* Gluing two slots that carry the same edge id identifies the start of
  each with the end of the other.

With vertices (punctures) deleted, ``chi(surface) = t - e``, so an ideal
triangulation of S_{g,n} has ``t = 2(2g - 2 + n)`` triangles.
"""

from __future__ import annotations

import hashlib
import json

from .surface import SurfaceType


def _find(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _union(parent, a, b):
    ra, rb = _find(parent, a), _find(parent, b)
    if ra != rb:
        parent[rb] = ra


class Triangulation:
    """An oriented ideal triangulation, immutable once constructed."""

    def __init__(self, triangles):
        triangles = tuple(tuple(tri) for tri in triangles)
        if not triangles:
            raise ValueError("a triangulation needs at least one triangle")
        for tri in triangles:
            if len(tri) != 3:
                raise ValueError("triangle %r is not a triple" % (tri,))
        self.triangles = triangles
        counts = {}
        for tri in triangles:
            for e in tri:
                counts[e] = counts.get(e, 0) + 1
        edges = sorted(counts)
        if edges != list(range(len(edges))):
            raise ValueError("edge ids must be 0..e-1, got %r" % (edges,))
        bad = [e for e, k in counts.items() if k != 2]
        if bad:
            raise ValueError("edges %r do not occur exactly twice" % (sorted(bad),))
        self.edge_count = len(edges)
        self.triangle_count = len(triangles)

        # side = (triangle index, slot); pair the two sides of each edge
        by_edge = {}
        for t, tri in enumerate(triangles):
            for i, e in enumerate(tri):
                by_edge.setdefault(e, []).append((t, i))
        self._sides_of_edge = {e: tuple(sorted(ss)) for e, ss in by_edge.items()}
        self._glued = {}
        for s1, s2 in self._sides_of_edge.values():
            self._glued[s1] = s2
            self._glued[s2] = s1

        self._vertex_of_corner = self._compute_vertex_orbits()
        self.vertex_count = 1 + max(self._vertex_of_corner.values())

    # -- basic queries ----------------------------------------------------

    def sides_of_edge(self, e):
        """The two (triangle, slot) sides carrying edge ``e``, in sorted order."""
        return self._sides_of_edge[e]

    def glued_side(self, side):
        return self._glued[side]

    def edge_of_side(self, side):
        t, i = side
        return self.triangles[t][i]

    @staticmethod
    def side_start_corner(side):
        t, i = side
        return (t, (i + 1) % 3)

    @staticmethod
    def side_end_corner(side):
        t, i = side
        return (t, (i + 2) % 3)

    def vertex_of_corner(self, corner):
        """Index of the puncture at a (triangle, corner) pair."""
        return self._vertex_of_corner[corner]

    def vertex_orbits(self):
        """Corners grouped by puncture, each orbit sorted, orbits by first corner."""
        orbits = {}
        for corner, v in self._vertex_of_corner.items():
            orbits.setdefault(v, []).append(corner)
        return [sorted(orbits[v]) for v in sorted(orbits)]

    def edge_endpoints(self, e):
        """The sorted pair of punctures an edge runs between (equal for a loop)."""
        s1, s2 = self.sides_of_edge(e)
        return tuple(
            sorted(
                (
                    self.vertex_of_corner(self.side_start_corner(s1)),
                    self.vertex_of_corner(self.side_start_corner(s2)),
                )
            )
        )

    def edges_at_vertex(self, v):
        """Multiset of edge ids with an endpoint at puncture ``v`` (loops count twice)."""
        out = []
        for t, tri in enumerate(self.triangles):
            for i in range(3):
                # slot i starts at corner (i+1)%3; count each side-end once
                if self._vertex_of_corner[(t, (i + 1) % 3)] == v:
                    out.append(tri[i])
        # every edge end is a start of exactly one of its two sides
        return sorted(out)

    def _compute_vertex_orbits(self):
        parent = {(t, c): (t, c) for t in range(self.triangle_count) for c in range(3)}
        for s1, s2 in self._sides_of_edge.values():
            _union(parent, self.side_start_corner(s1), self.side_end_corner(s2))
            _union(parent, self.side_end_corner(s1), self.side_start_corner(s2))
        roots = {}
        for corner in sorted(parent):
            r = _find(parent, corner)
            roots.setdefault(r, []).append(corner)
        labelled = {}
        for v, r in enumerate(sorted(roots, key=lambda r: min(roots[r]))):
            for corner in roots[r]:
                labelled[corner] = v
        return labelled

    # -- surface recognition ----------------------------------------------

    def surface_type(self):
        """The punctured surface this triangulation presents."""
        v, e, t = self.vertex_count, self.edge_count, self.triangle_count
        chi_closed = v - e + t
        if chi_closed % 2 != 0:
            raise ValueError("odd Euler characteristic; not a closed surface")
        genus = (2 - chi_closed) // 2
        if genus < 0:
            raise ValueError("computed negative genus")
        return SurfaceType(genus, v, 0)

    def validate(self):
        """Recheck the structural invariants; raises on failure."""
        if 2 * self.edge_count != 3 * self.triangle_count:
            raise ValueError("e = 3t/2 violated")
        st = self.surface_type()
        if st.euler_characteristic() != self.triangle_count - self.edge_count:
            raise ValueError("Euler characteristic bookkeeping broken")
        return st

    # -- flips -------------------------------------------------------------

    def is_flippable(self, e):
        """An edge is flippable when its two sides lie in distinct triangles."""
        (t1, _), (t2, _) = self._sides_of_edge[e]
        return t1 != t2

    def flip_quad(self, e):
        """The square around a flippable edge ``e``.

        Returns ``(t1, t2, (x, y, z, w))`` where triangles ``t1 = (e,x,y)``
        and ``t2 = (e,z,w)`` after rotating ``e`` into slot 0, so the quad
        boundary reads ``y, z, w, x`` counterclockwise and the opposite
        side pairs are ``(y, w)`` and ``(x, z)``.
        """
        if not self.is_flippable(e):
            raise ValueError("edge %d is self-glued and cannot be flipped" % e)
        (t1, i1), (t2, i2) = self._sides_of_edge[e]
        a = self.triangles[t1]
        b = self.triangles[t2]
        x, y = a[(i1 + 1) % 3], a[(i1 + 2) % 3]
        z, w = b[(i2 + 1) % 3], b[(i2 + 2) % 3]
        return t1, t2, (x, y, z, w)

    def flip(self, e):
        """Triangulation obtained by replacing ``e`` with the other quad diagonal."""
        t1, t2, (x, y, z, w) = self.flip_quad(e)
        tris = list(self.triangles)
        tris[t1] = (e, y, z)
        tris[t2] = (e, w, x)
        return Triangulation(tris)

    # -- identity and serialization -----------------------------------------

    def canonical_key(self):
        """Triangle triples up to rotation and list order; preserves edge labels."""
        normalized = []
        for tri in self.triangles:
            rotations = [tri[i:] + tri[:i] for i in range(3)]
            normalized.append(min(rotations))
        return tuple(sorted(normalized))

    def content_hash(self):
        payload = json.dumps(self.canonical_key()).encode()
        return hashlib.sha256(payload).hexdigest()[:16]

    def is_same_triangulation(self, other):
        return self.canonical_key() == other.canonical_key()

    def to_json(self):
        return {
            "surface": self.surface_type().to_json(),
            "triangles": [list(tri) for tri in self.triangles],
            "vertexOrbits": [[list(c) for c in orbit] for orbit in self.vertex_orbits()],
        }

    @classmethod
    def from_json(cls, obj):
        tri = cls(obj["triangles"])
        if "surface" in obj:
            declared = SurfaceType.from_json(obj["surface"])
            if declared != tri.surface_type():
                raise ValueError(
                    "declared surface %s does not match computed %s"
                    % (declared, tri.surface_type())
                )
        if "vertexOrbits" in obj:
            declared_orbits = [sorted(tuple(c) for c in orbit) for orbit in obj["vertexOrbits"]]
            if sorted(map(tuple, declared_orbits)) != sorted(map(tuple, tri.vertex_orbits())):
                raise ValueError("declared vertex orbits do not match the gluing")
        return tri

    def __repr__(self):
        return "Triangulation(%s on %s)" % (list(self.triangles), self.surface_type())


# -- reference constructions ---------------------------------------------


def punctured_sphere(n):
    """Double of a fan-triangulated n-gon: the n-punctured sphere, n >= 3.

    Punctures are the polygon vertices 0..n-1.  Edge ids: polygon side
    between vertex k and k+1 (mod n) gets id k; the fan diagonals (0, k)
    for k = 2..n-2 get ids n..2n-5 on the front copy and 2n-4..3n-7 on
    the back copy.
    """
    if n < 3:
        raise ValueError("need at least three punctures")

    def side(k):
        return k % n

    def front_diag(k):
        return n + (k - 2)

    def back_diag(k):
        return (2 * n - 3) + (k - 2)

    def front_edge(k):  # edge (0, k) on the front copy
        if k == 1:
            return side(0)
        if k == n - 1:
            return side(n - 1)
        return front_diag(k)

    def back_edge(k):
        if k == 1:
            return side(0)
        if k == n - 1:
            return side(n - 1)
        return back_diag(k)

    tris = []
    for k in range(1, n - 1):
        tris.append((front_edge(k), side(k), front_edge(k + 1)))
    for k in range(1, n - 1):
        tris.append((back_edge(k + 1), side(k), back_edge(k)))
    tri = Triangulation(tris)
    assert tri.surface_type() == SurfaceType(0, n, 0), tri.surface_type()
    return tri


def polygon_vertex_cycle(tri, n):
    """Vertex ids of a ``punctured_sphere(n)`` rim, in polygon order.

    Vertex ids are orbit indices and depend on the gluing bookkeeping,
    so the polygon labels are recovered from the side edges: side k
    joins polygon vertices k and k+1 (mod n).  Returns the list whose
    k-th entry is the vertex id of polygon vertex k; entry 0 is the fan
    apex.
    """
    ends = [tri.edge_endpoints(e) for e in range(n)]
    first = set(ends[n - 1]) & set(ends[0])
    assert len(first) == 1, "side edges do not close into a polygon"
    cycle = [first.pop()]
    for k in range(n - 1):
        u, v = ends[k]
        cycle.append(v if cycle[-1] == u else u)
    assert sorted(cycle) == list(range(n))
    return cycle


def four_punctured_sphere():
    """Boundary of the tetrahedron on punctures A,B,C,D = 0,1,2,3.

    Edge ids: AB=0, BC=1, CD=2, DA=3, AC=4, BD=5.  This is the reference
    triangulation for slope curves: the slope p/q curve has weights
    |p| on AB and CD, |q| on BC and DA, and |p-q| on both AC and BD (in
    this gluing the two internal edges both realize the slope-1 arc of
    the pillowcase).
    """
    AB, BC, CD, DA, AC, BD = range(6)
    # Faces oriented as seen from outside the tetrahedron: A->B->C,
    # A->C->D, A->D->B, B->D->C.
    tris = [
        (AB, BC, AC),  # A B C: edges AB, BC, CA
        (AC, CD, DA),  # A C D
        (DA, BD, AB),  # A D B: edges AD, DB, BA
        (BD, CD, BC),  # B D C: edges BD, DC, CB
    ]
    tri = Triangulation(tris)
    assert tri.surface_type() == SurfaceType(0, 4, 0), tri.surface_type()
    return tri


def once_punctured_torus():
    """Square torus with one ideal vertex; edges h=0, v=1, d=2.

    The slope p/q curve has weights (|p|, |q|, |p-q|) on (h, v, d).
    """
    h, v, d = 0, 1, 2
    tri = Triangulation([(h, v, d), (d, h, v)])
    assert tri.surface_type() == SurfaceType(1, 1, 0), tri.surface_type()
    return tri


def genus_two_one_puncture():
    """Fan-triangulated octagon with boundary word a b a' b' c d c' d'."""
    A, B, C, D = 0, 1, 2, 3
    d2, d3, d4, d5, d6 = 4, 5, 6, 7, 8
    sides = [A, B, A, B, C, D, C, D]  # polygon side k, identified in pairs

    def edge(i, j):
        # edge between polygon corners i < j (fan from corner 0)
        if j == i + 1:
            return sides[i]
        if (i, j) == (0, 7):
            return sides[7]
        assert i == 0
        return {2: d2, 3: d3, 4: d4, 5: d5, 6: d6}[j]

    tris = []
    for k in range(1, 7):
        tris.append((edge(0, k), edge(k, k + 1), edge(0, k + 1)))
    tri = Triangulation(tris)
    assert tri.surface_type() == SurfaceType(2, 1, 0), tri.surface_type()
    return tri


def insert_puncture(tri, triangle_index=0):
    """Cone one triangle from a new interior puncture; adds 3 edges, 2 triangles."""
    x, y, z = tri.triangles[triangle_index]
    e = tri.edge_count
    p, q, r = e, e + 1, e + 2  # to corner 0, corner 1, corner 2
    tris = list(tri.triangles)
    tris[triangle_index] = (q, x, r)
    tris.append((r, y, p))
    tris.append((p, z, q))
    out = Triangulation(tris)
    st = tri.surface_type()
    assert out.surface_type() == SurfaceType(st.genus, st.punctures + 1, 0)
    return out


def twice_punctured_torus():
    return insert_puncture(once_punctured_torus(), 0)


# -- combinatorial isomorphism (edge relabelings) -------------------------


def _rotations(tri):
    return [tri, tri[1:] + tri[:1], tri[2:] + tri[:2]]


def relabelings_onto(source, target):
    """All edge bijections carrying ``source`` onto ``target``.

    An orientation-preserving combinatorial isomorphism is a bijection of
    edge ids mapping the triangle triples of ``source`` onto those of
    ``target`` up to rotation.  Yields dicts in a deterministic order.
    """
    if source.triangle_count != target.triangle_count:
        return
    tgt_tris = sorted(target.triangles)
    results = []

    def extend(idx, edge_map, used_tris):
        if idx == source.triangle_count:
            results.append(dict(edge_map))
            return
        tri = source.triangles[idx]
        for j, cand in enumerate(tgt_tris):
            if j in used_tris:
                continue
            for rot in _rotations(cand):
                ok = True
                added = []
                for a, b in zip(tri, rot):
                    if a in edge_map:
                        if edge_map[a] != b:
                            ok = False
                            break
                    elif b in edge_map.values():
                        ok = False
                        break
                    else:
                        edge_map[a] = b
                        added.append(a)
                if ok:
                    used_tris.add(j)
                    extend(idx + 1, edge_map, used_tris)
                    used_tris.discard(j)
                for a in added:
                    del edge_map[a]

    extend(0, {}, set())
    seen = set()
    for m in sorted(results, key=lambda m: sorted(m.items())):
        key = tuple(sorted(m.items()))
        if key not in seen:
            seen.add(key)
            yield m

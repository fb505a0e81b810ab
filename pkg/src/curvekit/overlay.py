"""Exact geometric intersection numbers for normal curves.

Two curves are put in a common transverse position by realizing both as
corner-arc systems: on each edge the points of the first curve are
listed before the points of the second (seen from the edge's canonical
side), and inside each triangle arcs become chords of the boundary
circle, crossing exactly when their endpoints interleave.

The union of the two curves is then a 4-valent graph on the surface.
Complementary regions are computed by cutting each triangle along the
chords and gluing the resulting cells across triangulation edges; each
region knows its Euler characteristic and the punctures it contains.
A *bigon* is a disc region with no punctures whose boundary consists of
one arc of each curve meeting at two distinct crossings.  Removing a
bigon (an isotopy pushing one arc across the other) deletes its two
crossings and merges the three regions beside them.  When no bigon
remains the curves are in minimal position and the number of surviving
crossings is the geometric intersection number.

Reduction order is deterministic: among the bigon faces (all of which
have empty interior, hence innermost) the one with the smallest crossing
identifier is removed first.
"""

from __future__ import annotations

from .normal import trace_detailed, trace_components, validate_normal

_IN = "in"
_OUT = "out"


def _flip(kind):
    return _OUT if kind == _IN else _IN


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _trace_orbit_faces(edges, rotations):
    """Faces of a graph with a rotation system.

    ``edges`` is a list of (node, node) pairs; ``rotations`` maps each
    node to its cyclic list of germs ``(edge_index, direction)`` leaving
    the node, in rotational order.  Returns a list of faces, each a list
    of directed half-edges ``(edge_index, direction)``.
    """
    nxt = {}
    for node, germs in rotations.items():
        n = len(germs)
        for k, (e, d) in enumerate(germs):
            nxt[(e, -d)] = germs[k - 1 if k else n - 1]

    faces = []
    seen = set()
    for h0 in sorted(nxt):
        if h0 in seen:
            continue
        walk = []
        h = h0
        while h not in seen:
            seen.add(h)
            walk.append(h)
            h = nxt[h]
        assert h == h0, "face tracing did not close up"
        faces.append(walk)
    return faces


class _TriangleCells:
    """Chord arrangement of one triangle: cells, crossings, adjacency.

    ``chords`` is a list of records ``(label, rank_in, rank_out,
    crossings)`` where ranks index the boundary circle nodes and
    ``crossings`` lists crossing ids in order from the in-endpoint.
    Boundary circle nodes are: for each slot i the corner ``(i+1)%3``
    followed by the merged points of side i.
    """

    def __init__(self, t, side_totals, chords, crossing_chords):
        self.t = t
        self._germ_kind = {}
        circle = []
        self.point_rank = {}
        for i in range(3):
            circle.append(("c", (i + 1) % 3))
            for m in range(side_totals[i]):
                self.point_rank[(i, m)] = len(circle)
                circle.append(("p", i, m))
        self.circle = circle
        n_circle = len(circle)

        edges = []  # (node_from, node_to)
        edge_key = {}  # descriptive key -> edge index

        # boundary segments, in circle order; segment key ('b', slot, j)
        seg_of_circle_gap = []
        for k in range(n_circle):
            a, b = circle[k], circle[(k + 1) % n_circle]
            if b[0] == "c":
                slot = (b[1] + 1) % 3  # b is the end corner of this slot
                j = side_totals[slot]
            else:
                slot, j = b[1], b[2]
            edge_key[("b", slot, j)] = len(edges)
            edges.append((a, b))
            seg_of_circle_gap.append(("b", slot, j))

        # chord pieces; key ('ch', label, piece_index)
        chord_nodes = {}
        for label, rank_in, rank_out, xs in chords:
            seq = [circle[rank_in]] + [("x", cid) for cid in xs] + [circle[rank_out]]
            chord_nodes[label] = seq
            for m in range(len(seq) - 1):
                edge_key[("ch", label, m)] = len(edges)
                edges.append((seq[m], seq[m + 1]))

        # rotations
        rotations = {}
        for k in range(n_circle):
            node = circle[k]
            fwd = (edge_key[seg_of_circle_gap[k]], 1)
            bwd = (edge_key[seg_of_circle_gap[k - 1]], -1)
            rotations[node] = [fwd, bwd]
        for label, rank_in, rank_out, xs in chords:
            seq = chord_nodes[label]
            node_in, node_out = seq[0], seq[-1]
            fwd, bwd = rotations[node_in]
            rotations[node_in] = [fwd, (edge_key[("ch", label, 0)], 1), bwd]
            fwd, bwd = rotations[node_out]
            rotations[node_out] = [fwd, (edge_key[("ch", label, len(seq) - 2)], -1), bwd]

        self._ranks = {}
        for label, rank_in, rank_out, xs in chords:
            self._ranks[label] = (rank_in, rank_out)
        for cid, (la, lb) in sorted(crossing_chords.items()):
            germs = []
            for label in (la, lb):
                seq = chord_nodes[label]
                k = seq.index(("x", cid))
                rank_in, rank_out = self._ranks[label]
                germs.append((rank_in, (edge_key[("ch", label, k - 1)], -1), (label[0], _IN)))
                germs.append((rank_out, (edge_key[("ch", label, k)], 1), (label[0], _OUT)))
            germs.sort()
            rotations[("x", cid)] = [g[1] for g in germs]
            # record germ kinds for quadrant labelling
            for rank, germ, kind in germs:
                self._germ_kind[(cid, germ)] = kind

        faces = _trace_orbit_faces(edges, rotations)
        n_nodes = n_circle + len(crossing_chords)
        n_inner = len(edges) - n_nodes + 1
        assert len(faces) == n_inner + 1, "triangle cell count is off"

        # outer face: contains the reversed first boundary segment
        face_of_half = {}
        for f, walk in enumerate(faces):
            for h in walk:
                face_of_half[h] = f
        outer = face_of_half[(0, -1)]
        for k in range(n_circle):
            assert face_of_half[(k, -1)] == outer, "boundary does not bound"

        self.faces = faces
        self.outer = outer
        self.edges = edges
        self.edge_key = edge_key
        self.face_of_half = face_of_half
        # interior face left of each boundary segment (forward direction),
        # and the two faces beside each chord piece (left, right)
        self.face_of_segment = {}
        self.chord_side_faces = {}
        for key, e in edge_key.items():
            if key[0] == "b":
                self.face_of_segment[key[1:]] = face_of_half[(e, 1)]
            else:
                self.chord_side_faces[key[1:]] = (face_of_half[(e, 1)], face_of_half[(e, -1)])
        # face at each corner, and quadrant -> face
        self.face_of_corner = {}
        self.face_of_quadrant = {}
        germ_kind = self._germ_kind
        for f, walk in enumerate(faces):
            if f == outer:
                continue
            n_walk = len(walk)
            for k, h in enumerate(walk):
                e, d = h
                a_node, b_node = edges[e]
                tail = a_node if d > 0 else b_node
                if tail[0] == "c":
                    self.face_of_corner[tail[1]] = f
                head = b_node if d > 0 else a_node
                if head[0] == "x":
                    cid = head[1]
                    arrive = germ_kind[(cid, (e, -d))]
                    leave = germ_kind[(cid, walk[(k + 1) % n_walk])]
                    quad = self._quad_label(arrive, leave)
                    self.face_of_quadrant[(cid, quad)] = f

    @staticmethod
    def _quad_label(kind1, kind2):
        assert kind1[0] != kind2[0], "quadrant germs must come from both curves"
        if kind1[0] == "a":
            return (kind1[1], kind2[1])
        return (kind2[1], kind1[1])


class Overlay:
    """The transverse overlay of two normal curves, reducible to minimal position."""

    def __init__(self, tri, wa, wb):
        for w in (wa, wb):
            problems = validate_normal(tri, w)
            if problems:
                raise ValueError("; ".join(problems))
        self.tri = tri
        self.wa = tuple(wa)
        self.wb = tuple(wb)
        comps_a = trace_detailed(tri, self.wa)
        comps_b = trace_detailed(tri, self.wb)
        if len(comps_a) != 1 or len(comps_b) != 1:
            raise ValueError("overlay expects connected curves")
        self.steps_a = comps_a[0].steps
        self.steps_b = comps_b[0].steps
        self._build()

    # -- construction ------------------------------------------------------

    def _merged_side_pos(self, curve, side, pos):
        """Merged boundary position of a curve point, seen from ``side``."""
        tri = self.tri
        e = tri.edge_of_side(side)
        canonical = tri.sides_of_edge(e)[0]
        wa, wb = self.wa[e], self.wb[e]
        own = wa if curve == "a" else wb
        k = pos if side == canonical else own - 1 - pos
        merged = k if curve == "a" else wa + k
        return merged if side == canonical else (wa + wb - 1 - merged)

    def _build(self):
        tri = self.tri
        totals = [self.wa[e] + self.wb[e] for e in range(tri.edge_count)]

        # chords per triangle: (curve, step_index) -> (rank_in, rank_out)
        by_triangle = {t: [] for t in range(tri.triangle_count)}
        for curve, steps in (("a", self.steps_a), ("b", self.steps_b)):
            for idx, step in enumerate(steps):
                t, corner, depth, side_in, pos_in, side_out, pos_out = step
                m_in = self._merged_side_pos(curve, side_in, pos_in)
                m_out = self._merged_side_pos(curve, side_out, pos_out)
                by_triangle[t].append((curve, idx, side_in[1], m_in, side_out[1], m_out))

        # crossings: a-chord x b-chord with interleaved endpoints
        self.rot = {}  # cid -> ccw germ 4-tuple of (curve, kind)
        cells = {}
        arc_order_a = {}
        arc_order_b = {}
        for t in range(tri.triangle_count):
            side_totals = [totals[tri.triangles[t][i]] for i in range(3)]
            point_rank = {}
            circle_len = 3 + sum(side_totals)
            k = 0
            for i in range(3):
                k += 1  # corner
                for m in range(side_totals[i]):
                    point_rank[(i, m)] = k
                    k += 1
            chords_a = [c for c in by_triangle[t] if c[0] == "a"]
            chords_b = [c for c in by_triangle[t] if c[0] == "b"]
            rank_pairs = {
                (c[0], c[1]): (point_rank[(c[2], c[3])], point_rank[(c[4], c[5])])
                for c in chords_a + chords_b
            }
            b_ranks = [(cb[1],) + rank_pairs[("b", cb[1])] for cb in chords_b]

            crossing_chords = {}
            chord_xs = {("a", c[1]): [] for c in chords_a}
            chord_xs.update({("b", c[1]): [] for c in chords_b})
            for ca in chords_a:
                ra1, ra2 = rank_pairs[("a", ca[1])]
                na2 = (ra2 - ra1) % circle_len
                hits = []
                for bid, rb1, rb2 in b_ranks:
                    nb1 = (rb1 - ra1) % circle_len
                    nb2 = (rb2 - ra1) % circle_len
                    # chords cross exactly when their endpoints interleave
                    if (0 < nb1 < na2) == (0 < nb2 < na2):
                        continue
                    cid = (ca[1], bid)
                    crossing_chords[cid] = (("a", ca[1]), ("b", bid))
                    # ccw germ order at the crossing = circular order of endpoints
                    ends = sorted(
                        [
                            (ra1, ("a", _IN)),
                            (ra2, ("a", _OUT)),
                            (rb1, ("b", _IN)),
                            (rb2, ("b", _OUT)),
                        ]
                    )
                    self.rot[cid] = tuple(kind for _, kind in ends)
                    # position of the b endpoint on the in->out side of a
                    hits.append((nb1 if 0 < nb1 < na2 else nb2, cid))
                    # and along b, position of the a endpoint
                    nbspan = (rb2 - rb1) % circle_len
                    va = (ra1 - rb1) % circle_len
                    voff = va if 0 < va < nbspan else (ra2 - rb1) % circle_len
                    chord_xs[("b", bid)].append((voff, cid))
                hits.sort()
                chord_xs[("a", ca[1])] = [cid for _, cid in hits]
            for key in list(chord_xs):
                if key[0] == "b":
                    chord_xs[key] = [cid for _, cid in sorted(chord_xs[key])]
            for c in chords_a + chords_b:
                target = arc_order_a if c[0] == "a" else arc_order_b
                target[c[1]] = chord_xs[(c[0], c[1])]
            chord_records = [
                ((c[0], c[1]),) + rank_pairs[(c[0], c[1])] + (chord_xs[(c[0], c[1])],)
                for c in sorted(chords_a + chords_b, key=lambda c: (c[0], c[1]))
            ]
            cells[t] = _TriangleCells(t, side_totals, chord_records, crossing_chords)

        # crossing sequences along each curve
        self.order_a = []
        for idx in range(len(self.steps_a)):
            self.order_a.extend(arc_order_a.get(idx, []))
        self.order_b = []
        for idx in range(len(self.steps_b)):
            self.order_b.extend(arc_order_b.get(idx, []))
        assert sorted(self.order_a) == sorted(self.order_b)

        # glue triangle cells into regions of the curve complement
        uf = _UnionFind()
        for t in range(tri.triangle_count):
            for f in range(len(cells[t].faces)):
                if f != cells[t].outer:
                    uf.add((t, f))
        glue_pairs = []
        for e in range(tri.edge_count):
            (t1, i1), (t2, i2) = tri.sides_of_edge(e)
            m = totals[e]
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
                r = uf.find((t, f))
                punctures[r].add(tri.vertex_of_corner((t, corner)))
        for f1, f2 in glue_pairs:
            chi[uf.find(f1)] -= 1

        self.region_of_quadrant = {}
        for t in range(tri.triangle_count):
            for (cid, quad), f in cells[t].face_of_quadrant.items():
                self.region_of_quadrant[(cid, quad)] = uf.find((t, f))
        self.region_chi = chi
        self.region_punctures = {r: frozenset(ps) for r, ps in punctures.items()}

        st = tri.surface_type()
        self._chi_base = 2 - 2 * st.genus - st.punctures
        self._assert_chi()

    def _assert_chi(self):
        total_chi = sum(self.region_chi.values())
        assert total_chi == self._chi_base + len(self.order_a), (
            "region Euler characteristics do not add up"
        )

    # -- the abstract 4-valent map ------------------------------------------

    def _walks(self):
        """Boundary walks of the curve complement, from the rotation data.

        Each walk is a list of visits ``(cid, quad, leave_germ)`` where
        ``quad`` is the quadrant label occupied by the region at that
        crossing.
        """
        pos_a = {cid: k for k, cid in enumerate(self.order_a)}
        pos_b = {cid: k for k, cid in enumerate(self.order_b)}
        n = len(self.order_a)
        if n == 0:
            return []

        def next_arrival(cid, leave):
            curve, kind = leave
            order, pos = (self.order_a, pos_a) if curve == "a" else (self.order_b, pos_b)
            k = pos[cid]
            if kind == _OUT:
                return order[(k + 1) % len(order)], (curve, _IN)
            return order[(k - 1) % len(order)], (curve, _OUT)

        def leave_of(cid, arrive):
            rot = self.rot[cid]
            k = rot.index(arrive)
            return rot[(k - 1) % 4]

        walks = []
        seen = set()
        starts = [(cid, (c, k)) for cid in self.order_a for c in ("a", "b") for k in (_IN, _OUT)]
        for cid0, arrive0 in starts:
            if (cid0, arrive0) in seen:
                continue
            walk = []
            cid, arrive = cid0, arrive0
            while (cid, arrive) not in seen:
                seen.add((cid, arrive))
                leave = leave_of(cid, arrive)
                quad = self._quadrant(arrive, leave)
                walk.append((cid, quad, leave))
                cid, arrive = next_arrival(cid, leave)
            assert (cid, arrive) == (cid0, arrive0)
            walks.append(walk)
        return walks

    @staticmethod
    def _quadrant(germ1, germ2):
        kinds = dict([germ1, germ2])
        assert len(kinds) == 2
        return (kinds["a"], kinds["b"])

    def _check_walks(self):
        """Full structural audit of the 4-valent map (slow; for tests).

        Traces every boundary walk of the curve complement and checks
        that each walk stays inside one region and that the walks cover
        every quadrant exactly once.
        """
        self._assert_chi()
        self.walks = self._walks()
        region_walks = {}
        covered = set()
        for w, walk in enumerate(self.walks):
            regions = {self.region_of_quadrant[(cid, quad)] for cid, quad, _ in walk}
            assert len(regions) == 1, "a boundary walk strays across regions"
            region_walks.setdefault(regions.pop(), []).append(w)
            covered.update((cid, quad) for cid, quad, _ in walk)
        assert covered == set(self.region_of_quadrant), "walks do not cover all quadrants"
        self.region_walks = region_walks

    # -- bigon reduction -----------------------------------------------------

    def _corner_slots(self):
        """Quadrant slots of each region, as a dict of sets."""
        corners = {}
        for slot, r in self.region_of_quadrant.items():
            corners.setdefault(r, set()).add(slot)
        return corners

    def _bigons_from(self, corners):
        chi = self.region_chi
        punct = self.region_punctures
        out = []
        for r, slots in corners.items():
            if len(slots) != 2:
                continue
            if chi.get(r, 0) != 1 or punct.get(r):
                continue
            (x, qx), (y, qy) = sorted(slots)
            if x == y:
                continue
            out.append((x, y, r, ((x, qx), (y, qy))))
        out.sort()
        return out

    def _bigons(self):
        """Bigon faces, found from quadrant incidence counts.

        A region of Euler characteristic 1 with no punctures is a disc
        with a single boundary circle; when it touches exactly two
        quadrant corners at two distinct crossings, that boundary is one
        arc of each curve, i.e. a bigon.  (A quadrant is bounded by one
        germ of each curve, so the two boundary sides belong to
        different curves automatically.)
        """
        return self._bigons_from(self._corner_slots())

    def reduce(self):
        """Remove bigons until none remain; returns the surviving crossing count.

        A face-bigon's boundary meets no crossing besides its own two, so
        bigons sharing neither a crossing nor an adjacent region can be
        removed in the same round without affecting one another; the
        rounds are still processed in the deterministic smallest-first
        order.
        """
        corners = self._corner_slots()
        rq = self.region_of_quadrant
        quads = ((_IN, _IN), (_IN, _OUT), (_OUT, _IN), (_OUT, _OUT))
        while self.order_a:
            bigons = self._bigons_from(corners)
            if not bigons:
                break
            used_crossings = set()
            used_regions = set()
            for _, _, r_bigon, walk in bigons:
                (x, qx), (y, qy) = walk
                if x in used_crossings or y in used_crossings:
                    continue
                rx = rq[(x, (_flip(qx[0]), _flip(qx[1])))]
                ry = rq[(y, (_flip(qy[0]), _flip(qy[1])))]
                regs = {r_bigon, rx, ry}
                if regs & used_regions:
                    continue
                new_r = min(regs)
                if rx != ry:
                    chi = self.region_chi[rx] + self.region_chi[ry] - 1
                    punct = self.region_punctures[rx] | self.region_punctures[ry]
                else:
                    chi = self.region_chi[rx] - 1
                    punct = self.region_punctures[rx]
                # retire the eight quadrant slots at the two crossings,
                # then fuse the three regions under the smallest label
                for cid in (x, y):
                    for quad in quads:
                        slot = (cid, quad)
                        corners[rq.pop(slot)].discard(slot)
                merged_slots = set()
                for r in regs:
                    del self.region_chi[r], self.region_punctures[r]
                    merged_slots |= corners.pop(r)
                for slot in merged_slots:
                    rq[slot] = new_r
                corners[new_r] = merged_slots
                self.region_chi[new_r] = chi
                self.region_punctures[new_r] = punct
                used_crossings.update((x, y))
                used_regions.update(regs)

            self.order_a = [c for c in self.order_a if c not in used_crossings]
            self.order_b = [c for c in self.order_b if c not in used_crossings]
            for cid in used_crossings:
                del self.rot[cid]

            self._assert_chi()
        return len(self.order_a)


_CACHE = {}


def intersection_number(tri, wa, wb):
    """Minimal number of transverse crossings between two normal curves."""
    wa, wb = tuple(wa), tuple(wb)
    key = (tri.content_hash(),) + (min(wa, wb), max(wa, wb))
    if key not in _CACHE:
        _CACHE[key] = Overlay(tri, wa, wb).reduce()
    return _CACHE[key]


def are_disjoint(tri, wa, wb):
    """True when the two curves have disjoint representatives.

    Normal coordinates add over disjoint unions, so a pair of curves is
    disjoint exactly when the sum vector traces back into the pair.
    """
    wa, wb = tuple(wa), tuple(wb)
    total = tuple(x + y for x, y in zip(wa, wb))
    return sorted(trace_components(tri, total)) == sorted([wa, wb])


def multicurve_is_disjoint(tri, vectors):
    """Pairwise-disjointness of a family of distinct curves, in one trace."""
    vectors = [tuple(v) for v in vectors]
    if len(set(vectors)) != len(vectors):
        return False
    total = tuple(sum(col) for col in zip(*vectors))
    return sorted(trace_components(tri, total)) == sorted(vectors)

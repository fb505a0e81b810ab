"""Normal coordinates for multicurves on an ideal triangulation.

A multicurve in normal position meets each triangle in disjoint corner
arcs.  Its coordinate vector assigns to every edge the number of
intersection points.  A nonnegative integer vector is *admissible* when
every triangle has an even weight sum and satisfies the triangle
inequality; admissible vectors correspond bijectively to isotopy
classes of multicurves whose components are essential or
puncture-parallel.  Equality of vectors is equality of curves.

Point bookkeeping: the ``w`` intersection points on an edge are indexed
0..w-1 from the start of the edge's canonical (lexicographically first)
side; seen from the glued side the order reverses.  Inside a triangle,
the arcs cutting off corner ``c`` are indexed by depth, 0 innermost.
"""

from __future__ import annotations


def triangle_corner_counts(weights, tri):
    """Corner arc counts (n0, n1, n2) for one triangle, or None if impossible."""
    a, b, c = (weights[e] for e in tri)
    counts = (b + c - a, c + a - b, a + b - c)
    if any(x < 0 or x % 2 for x in counts):
        return None
    return tuple(x // 2 for x in counts)


def validate_normal(tri, weights):
    """Check admissibility; returns a list of violation strings (empty = ok)."""
    problems = []
    if len(weights) != tri.edge_count:
        return ["expected %d weights, got %d" % (tri.edge_count, len(weights))]
    for e, w in enumerate(weights):
        if not isinstance(w, int) or w < 0:
            problems.append("weight of edge %d is %r, not a nonnegative integer" % (e, w))
    if problems:
        return problems
    for t, triple in enumerate(tri.triangles):
        if sum(weights[e] for e in triple) % 2:
            problems.append("triangle %d has odd weight sum" % t)
            continue
        if triangle_corner_counts(weights, triple) is None:
            problems.append("triangle %d violates the triangle inequality" % t)
    return problems


def is_admissible(tri, weights):
    return not validate_normal(tri, weights)


def corner_counts(tri, weights):
    """Dict (triangle, corner) -> number of arcs cutting off that corner."""
    out = {}
    for t, triple in enumerate(tri.triangles):
        counts = triangle_corner_counts(weights, triple)
        if counts is None:
            raise ValueError("weights %r are not admissible" % (weights,))
        for c in range(3):
            out[(t, c)] = counts[c]
    return out


def point_on_side(tri, side, pos, weights):
    """Canonical point id (edge, k) of the ``pos``-th point on ``side``."""
    e = tri.edge_of_side(side)
    s1, _ = tri.sides_of_edge(e)
    if side == s1:
        return (e, pos)
    return (e, weights[e] - 1 - pos)


def side_position(tri, side, point, weights):
    """Inverse of :func:`point_on_side`."""
    e, k = point
    s1, _ = tri.sides_of_edge(e)
    if side == s1:
        return k
    return weights[e] - 1 - k


def arc_endpoints(tri, weights, counts, t, corner, depth):
    """The two (side, side_position) endpoints of a corner arc.

    Corner ``c`` is the start corner of slot ``(c+2)%3`` and the end
    corner of slot ``(c+1)%3``; depth 0 is nearest the corner.
    """
    s_from = (t, (corner + 2) % 3)
    s_to = (t, (corner + 1) % 3)
    w_to = weights[tri.edge_of_side(s_to)]
    return (s_from, depth), (s_to, w_to - 1 - depth)


def arc_at(tri, weights, counts, side, pos):
    """Corner arc (t, corner, depth) through the point at ``pos`` on ``side``."""
    t, i = side
    w = weights[tri.edge_of_side(side)]
    start_c = (i + 1) % 3
    end_c = (i + 2) % 3
    n_start = counts[(t, start_c)]
    if pos < n_start:
        return (t, start_c, pos)
    assert pos < w, "position beyond edge weight"
    return (t, end_c, w - 1 - pos)


def trace_components(tri, weights):
    """Split an admissible vector into its component curves.

    Returns a list of weight tuples, one per component, sorted.  Parallel
    components produce repeated entries.
    """
    return [comp.weights for comp in trace_detailed(tri, weights)]


class TracedComponent:
    """One component of a multicurve, with its traversal through triangles.

    ``steps`` is the cyclic list of corner arcs in traversal order; each
    step is ``(t, corner, depth, side_in, pos_in, side_out, pos_out)``.
    """

    __slots__ = ("weights", "steps")

    def __init__(self, weights, steps):
        self.weights = weights
        self.steps = steps

    def __repr__(self):
        return "TracedComponent(%r, %d arcs)" % (self.weights, len(self.steps))


def trace_detailed(tri, weights):
    """Trace every component, keeping the arc-by-arc traversal."""
    problems = validate_normal(tri, weights)
    if problems:
        raise ValueError("; ".join(problems))
    counts = corner_counts(tri, weights)
    seen = set()
    components = []
    # deterministic scan over canonical points
    for e in range(tri.edge_count):
        for k in range(weights[e]):
            if (e, k) in seen:
                continue
            steps = []
            comp_weights = [0] * tri.edge_count
            # enter via the canonical (first) side of edge e
            side = tri.sides_of_edge(e)[0]
            pos = k
            while True:
                point = point_on_side(tri, side, pos, weights)
                if point in seen:
                    break
                seen.add(point)
                comp_weights[point[0]] += 1
                t, corner, depth = arc_at(tri, weights, counts, side, pos)
                (sa, pa), (sb, pb) = arc_endpoints(tri, weights, counts, t, corner, depth)
                if (sa, pa) == (side, pos):
                    side_out, pos_out = sb, pb
                else:
                    assert (sb, pb) == (side, pos)
                    side_out, pos_out = sa, pa
                steps.append((t, corner, depth, side, pos, side_out, pos_out))
                exit_point = point_on_side(tri, side_out, pos_out, weights)
                side = tri.glued_side(side_out)
                pos = side_position(tri, side, exit_point, weights)
            components.append(TracedComponent(tuple(comp_weights), steps))
    components.sort(key=lambda c: c.weights)
    return components


def vertex_link(tri, v):
    """Weights of the small circle around puncture ``v`` (a vertex link)."""
    w = [0] * tri.edge_count
    for e in range(tri.edge_count):
        for side in tri.sides_of_edge(e):
            if tri.vertex_of_corner(tri.side_start_corner(side)) == v:
                w[e] += 1
    return tuple(w)


def vertex_links(tri):
    return [vertex_link(tri, v) for v in range(tri.vertex_count)]


def edge_endpoints(tri, e):
    """The pair of punctures an edge runs between (equal for a loop edge)."""
    return tri.edge_endpoints(e)


def enclosing_vector(tri, vertex_set):
    """Edge-cut weights of a puncture set: 1 on edges leaving the set.

    This is the normal multicurve bounding a neighbourhood of the
    subgraph spanned by ``vertex_set``; it is a single curve exactly
    when that induced subgraph is a tree (one boundary circle), which
    callers should confirm by tracing.
    """
    inside = set(vertex_set)
    w = []
    for e in range(tri.edge_count):
        u, v = tri.edge_endpoints(e)
        w.append(1 if (u in inside) != (v in inside) else 0)
    return tuple(w)


class NormalCurve:
    """A single essential simple closed curve in normal coordinates.

    Identity is the weight tuple: two curves on the same triangulation
    are isotopic exactly when their vectors agree.
    """

    __slots__ = ("triangulation", "weights")

    def __init__(self, triangulation, weights):
        weights = tuple(int(w) for w in weights)
        problems = validate_normal(triangulation, weights)
        if problems:
            raise ValueError("; ".join(problems))
        comps = trace_components(triangulation, weights)
        if len(comps) != 1:
            raise ValueError(
                "weights %r trace into %d components, not a single curve"
                % (weights, len(comps))
            )
        if weights in vertex_links(triangulation):
            raise ValueError("weights %r describe a puncture-parallel circle" % (weights,))
        self.triangulation = triangulation
        self.weights = weights

    def total_weight(self):
        return sum(self.weights)

    def is_essential(self):
        return True  # enforced at construction

    def __eq__(self, other):
        return (
            isinstance(other, NormalCurve)
            and self.weights == other.weights
            and self.triangulation.is_same_triangulation(other.triangulation)
        )

    def __hash__(self):
        return hash(self.weights)

    def __lt__(self, other):
        return self.weights < other.weights

    def to_json(self):
        return {"weights": {str(e): w for e, w in enumerate(self.weights) if w}}

    @classmethod
    def from_json(cls, triangulation, obj):
        weights = [0] * triangulation.edge_count
        for key, w in obj["weights"].items():
            weights[int(key)] = int(w)
        return cls(triangulation, weights)

    def __repr__(self):
        return "NormalCurve(%r)" % (self.weights,)

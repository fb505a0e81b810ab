"""Finite curve-graph slices and small-graph utilities.

A slice is the induced subgraph of the curve graph on a curve
universe: vertices are curve ids, edges join disjoint curves.  The
helpers here (links, complement graphs, components, cut vertices,
isomorphism search) are the graph side of the curve classifiers.
"""

from .errors import ResourceLimitError
from .overlay import are_disjoint

ISOMORPHISM_VERTEX_LIMIT = 64


class GraphSlice:
    """Disjointness graph over a curve universe."""

    def __init__(self, universe, adjacency):
        self.universe = universe
        self.adjacency = {v: frozenset(ns) for v, ns in adjacency.items()}
        for v, ns in self.adjacency.items():
            assert v not in ns, "self-loop at %d" % v
            for w in ns:
                assert v in self.adjacency[w], "asymmetric edge (%d, %d)" % (v, w)

    @classmethod
    def build(cls, universe):
        """All-pairs disjointness over the universe."""
        assert len(universe) > 0, "universe is empty"
        tri = universe.triangulation
        vectors = universe.vectors
        adjacency = {v: set() for v in range(len(vectors))}
        for a in range(len(vectors)):
            for b in range(a + 1, len(vectors)):
                if are_disjoint(tri, vectors[a], vectors[b]):
                    adjacency[a].add(b)
                    adjacency[b].add(a)
        return cls(universe, adjacency)

    def vertices(self):
        return sorted(self.adjacency)

    def has_edge(self, a, b):
        return b in self.adjacency[a]

    def link(self, a):
        """All neighbours of a: the curves disjoint from it."""
        if a not in self.adjacency:
            raise LookupError("no vertex %r in slice" % (a,))
        return set(self.adjacency[a])

    def edge_count(self):
        return sum(len(ns) for ns in self.adjacency.values()) // 2

    def induced(self, vs):
        """Plain adjacency dict of the induced subgraph on vs."""
        keep = set(vs)
        assert keep <= set(self.adjacency), "vertices outside slice"
        return {v:
                set(self.adjacency[v]) & keep for v in sorted(keep)}

    def complement_graph(self, vs):
        """Graph on vs joining curves that intersect (the star construction)."""
        keep = sorted(set(vs))
        assert set(keep) <= set(self.adjacency), "vertices outside slice"
        return {v: {w for w in keep if w != v and w not in self.adjacency[v]}
                for v in keep}


def complement_graph(graph):
    """Complement of a plain adjacency dict on the same vertex set."""
    vs = sorted(graph)
    return {v: {w for w in vs if w != v and w not in graph[v]} for v in vs}


def connected_components(graph):
    """Sorted list of sorted vertex lists."""
    seen = set()
    comps = []
    for start in sorted(graph):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in graph[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return sorted(comps)


def degree(graph, v):
    if v not in graph:
        raise LookupError("no vertex %r" % (v,))
    return len(graph[v])


def is_cut_vertex(graph, v):
    """True when deleting v increases the number of components."""
    if v not in graph:
        raise LookupError("no vertex %r" % (v,))
    before = len(connected_components(graph))
    rest = {u: set(ns) - {v} for u, ns in graph.items() if u != v}
    if not rest:
        return False
    return len(connected_components(rest)) > before


def _refine_colors(graph, colors):
    """Iterated neighbourhood-colour refinement (partition sharpening)."""
    while True:
        sig = {v: (colors[v], tuple(sorted(colors[w] for w in graph[v])))
               for v in graph}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in graph}
        if new == colors:
            return colors
        colors = new


def are_isomorphic(g1, g2):
    """A vertex bijection preserving edges both ways, or None.

    Deterministic backtracking over id-sorted candidates, pruned by
    iterated degree refinement.  Refuses graphs above
    ISOMORPHISM_VERTEX_LIMIT vertices.
    """
    if len(g1) > ISOMORPHISM_VERTEX_LIMIT or len(g2) > ISOMORPHISM_VERTEX_LIMIT:
        raise ResourceLimitError(
            "isomorphism search limited to %d vertices, got %d and %d"
            % (ISOMORPHISM_VERTEX_LIMIT, len(g1), len(g2)))
    if len(g1) != len(g2):
        return None
    c1 = _refine_colors(g1, {v: 0 for v in g1})
    c2 = _refine_colors(g2, {v: 0 for v in g2})
    if sorted(c1.values()) != sorted(c2.values()):
        return None
    order = sorted(g1, key=lambda v: (c1[v], v))
    mapping = {}
    used = set()

    def extend(k):
        if k == len(order):
            return True
        v = order[k]
        for w in sorted(g2):
            if w in used or c2[w] != c1[v]:
                continue
            ok = True
            for u in mapping:
                if (u in g1[v]) != (mapping[u] in g2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    if extend(0):
        return dict(mapping)
    return None


def to_dot(graph, name="curves", labels=None):
    """DOT text with id-sorted vertices and edges."""
    labels = labels or {}
    lines = ["graph %s {" % name]
    for v in sorted(graph):
        if v in labels:
            lines.append('  "%s" [label="%s"];' % (v, labels[v]))
        else:
            lines.append('  "%s";' % (v,))
    for v in sorted(graph):
        for w in sorted(graph[v]):
            if v < w:
                lines.append('  "%s" -- "%s";' % (v, w))
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_adjacency(graph):
    """JSON-ready adjacency: sorted vertex keys, sorted neighbour lists."""
    return {str(v): sorted(graph[v]) for v in sorted(graph)}

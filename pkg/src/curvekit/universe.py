"""Bounded exhaustive enumeration of essential curves.

A curve universe is the finite set of all essential connected normal
curves whose total edge weight does not exceed a bound L, listed in
lexicographic order of weight vectors.  It is the desk-scale stand-in
for the full vertex set of the curve graph.
"""

import json

from .errors import ResourceLimitError
from .normal import NormalCurve, trace_components, vertex_links

# Hard ceiling on admissible vectors generated in one enumeration; past
# this the bound is declared too large rather than exhausting memory.
GENERATION_CAP = 5_000_000


def _edge_order(tri):
    """A static edge order that closes triangle constraints early.

    Greedy: repeatedly pick the edge that completes the most triangles
    (then leaves the most triangles one-short, then lowest id).  The
    depth-first generator prunes far better when every new edge is
    checked against fully assigned triangles as soon as possible.
    """
    remaining = set(range(tri.edge_count))
    filled = [0] * len(tri.triangles)
    order = []
    while remaining:
        best = None
        for e in sorted(remaining):
            completes = twos = 0
            for t in range(len(tri.triangles)):
                mult = tri.triangles[t].count(e)
                if not mult:
                    continue
                if filled[t] + mult == 3:
                    completes += 1
                elif filled[t] + mult == 2:
                    twos += 1
            score = (completes, twos, -e)
            if best is None or score > best[0]:
                best = (score, e)
        e = best[1]
        order.append(e)
        remaining.discard(e)
        for t in range(len(tri.triangles)):
            filled[t] += tri.triangles[t].count(e)
    return order


def _edge_constraint(triple, e, values):
    """Allowed (lo, hi, parity) for edge ``e`` in one triangle.

    ``values[f]`` is the assigned weight of edge f or None.  Returns
    parity None when unconstrained, hi None when unbounded above, or
    the string "empty" when no value can work.
    """
    slots = [f for f in triple if f != e]
    if len(slots) == 1:  # e occupies two sides of this triangle
        c = values[slots[0]]
        if c is None:
            return (0, None, None)
        if c % 2:
            return "empty"
        return (c // 2, None, None)
    a, b = values[slots[0]], values[slots[1]]
    if a is None or b is None:
        return (0, None, None)
    return (abs(a - b), a + b, (a + b) % 2)


def _lower_bound(tri, e, values):
    """Cheapest weight edge ``e`` can still take under current values."""
    lo = 0
    for t in tri.sides_of_edge(e):
        con = _edge_constraint(tri.triangles[t[0]], e, values)
        if con == "empty":
            return None
        lo = max(lo, con[0])
    return lo


def _admissible_vectors(tri, bound, root_values=None):
    """Yield all admissible weight vectors with 1 <= sum <= bound.

    Depth-first over a fixed edge order; every triangle's parity and
    triangle-inequality conditions are enforced the moment its last
    edge is assigned, so each full assignment is admissible by
    construction.  ``root_values`` restricts the first edge in the
    order to those weights (used to partition work across workers).
    """
    order = _edge_order(tri)
    ecount = tri.edge_count
    values = [None] * ecount
    triangles_of = [sorted({s[0] for s in tri.sides_of_edge(e)}) for e in range(ecount)]
    generated = 0

    def rest_bound(depth):
        lo = 0
        for f in order[depth:]:
            b = _lower_bound(tri, f, values)
            if b is None:
                return None
            lo += b
        return lo

    def visit(depth, used):
        nonlocal generated
        if depth == ecount:
            if used:
                generated += 1
                if generated > GENERATION_CAP:
                    raise ResourceLimitError(
                        "bound %d generated more than %d admissible vectors"
                        % (bound, GENERATION_CAP)
                    )
                yield tuple(values)
            return
        e = order[depth]
        lo, hi, parity = 0, bound - used, None
        for t in triangles_of[e]:
            con = _edge_constraint(tri.triangles[t], e, values)
            if con == "empty":
                return
            clo, chi, cpar = con
            lo = max(lo, clo)
            if chi is not None:
                hi = min(hi, chi)
            if cpar is not None:
                if parity is not None and parity != cpar:
                    return
                parity = cpar
        if parity is not None and lo % 2 != parity:
            lo += 1
        step = 1 if parity is None else 2
        if depth == 0 and root_values is not None:
            pool = [v for v in root_values
                    if lo <= v <= hi and (parity is None or v % 2 == parity)]
        else:
            pool = range(lo, hi + 1, step)
        for v in pool:
            values[e] = v
            rest = rest_bound(depth + 1)
            if rest is not None and used + v + rest <= bound:
                yield from visit(depth + 1, used + v)
            values[e] = None

    yield from visit(0, 0)


def root_weight_range(tri, bound):
    """The weight values the first enumeration edge can take."""
    return range(0, bound + 1)


def enumerate_vectors(tri, bound, root_values=None):
    """Sorted list of essential single-curve vectors with sum <= bound."""
    links = vertex_links(tri)
    out = []
    for w in _admissible_vectors(tri, bound, root_values=root_values):
        if w in links:
            continue
        if len(trace_components(tri, w)) == 1:
            out.append(w)
    out.sort()
    return out


class CurveUniverse:
    """Every essential connected curve of total weight <= bound.

    Ids are positions in the lexicographically sorted vector list, so
    they are stable across runs and across worker counts.
    """

    def __init__(self, triangulation, bound, vectors):
        assert bound >= 1, "bound must be at least 1"
        self.triangulation = triangulation
        self.bound = int(bound)
        self.vectors = [tuple(v) for v in vectors]
        assert self.vectors == sorted(self.vectors), "universe vectors must be sorted"
        self._ids = {v: k for k, v in enumerate(self.vectors)}
        assert len(self._ids) == len(self.vectors), "duplicate universe vectors"
        self._curve_cache = {}

    @classmethod
    def enumerate(cls, triangulation, bound, workers=1):
        """Enumerate by pruned depth-first search over edge weights.

        With ``workers`` > 1 the root of the search tree is split into
        that many parts which are enumerated separately and merged; the
        final sort makes the result independent of the partitioning.
        """
        if bound < 1:
            raise ValueError("bound must be at least 1, got %r" % (bound,))
        workers = max(1, int(workers))
        if workers == 1:
            vectors = enumerate_vectors(triangulation, bound)
        else:
            roots = list(root_weight_range(triangulation, bound))
            merged = set()
            for k in range(workers):
                part = [v for i, v in enumerate(roots) if i % workers == k]
                if part:
                    merged.update(enumerate_vectors(triangulation, bound, root_values=part))
            vectors = sorted(merged)
        return cls(triangulation, bound, vectors)

    def __len__(self):
        return len(self.vectors)

    def __contains__(self, vector):
        return tuple(vector) in self._ids

    def ids(self):
        return range(len(self.vectors))

    def curve_by_id(self, k):
        if not 0 <= k < len(self.vectors):
            raise LookupError("no curve with id %r (universe has %d)" % (k, len(self.vectors)))
        if k not in self._curve_cache:
            self._curve_cache[k] = NormalCurve(self.triangulation, self.vectors[k])
        return self._curve_cache[k]

    def id_by_curve(self, curve):
        weights = curve.weights if isinstance(curve, NormalCurve) else tuple(curve)
        if weights not in self._ids:
            raise LookupError("curve %r is not in the universe" % (weights,))
        return self._ids[weights]

    def header(self):
        return {
            "format": "curve-universe",
            "triangulation": self.triangulation.content_hash(),
            "bound": self.bound,
            "count": len(self.vectors),
        }

    def save(self, path):
        """Write one JSON header line, then one curve per line."""
        with open(path, "w") as fh:
            fh.write(json.dumps(self.header(), sort_keys=True) + "\n")
            for k, v in enumerate(self.vectors):
                fh.write(json.dumps({"id": k, "weights": list(v)}) + "\n")

    @classmethod
    def load(cls, triangulation, path):
        with open(path) as fh:
            header = json.loads(fh.readline())
            if header.get("format") != "curve-universe":
                raise ValueError("%s is not a curve universe file" % path)
            if header["triangulation"] != triangulation.content_hash():
                raise ValueError(
                    "universe file %s was built for a different triangulation" % path
                )
            vectors = []
            for line in fh:
                rec = json.loads(line)
                assert rec["id"] == len(vectors), "universe file ids out of order"
                vectors.append(tuple(rec["weights"]))
        if len(vectors) != header["count"]:
            raise ValueError("universe file %s has %d curves, header says %d"
                             % (path, len(vectors), header["count"]))
        return cls(triangulation, header["bound"], vectors)

    def __repr__(self):
        return "CurveUniverse(%s, bound=%d, curves=%d)" % (
            self.triangulation.surface_type(), self.bound, len(self.vectors))

"""Mapping classes encoded as flip paths with a closing relabeling.

A mapping class is stored as a finite recipe: an ordered list of edge
flips applied to the reference triangulation, followed by an edge
relabeling that identifies the final triangulation with the initial
one.  Curves are transported by pushing their weight vectors through
each flip (the max-plus rule on the flipped edge) and then renaming
edges.  The encoding composes and inverts without ever leaving the
reference triangulation, which keeps curve identity checks trivial.
"""

from __future__ import annotations

import json

from .normal import validate_normal
from .triangulation import relabelings_onto


def flip_weights(tri, weights, e):
    """Push a normal weight vector through the diagonal flip of ``e``.

    In the square around ``e`` with opposite side pairs ``(y, w)`` and
    ``(x, z)``, the new diagonal weight is
    ``max(w_y + w_w, w_x + w_z) - w_e``; all other weights persist.
    """
    _, _, (x, y, z, w) = tri.flip_quad(e)
    out = list(weights)
    out[e] = max(weights[y] + weights[w], weights[x] + weights[z]) - weights[e]
    return tuple(out)


class MappingClass:
    """A surface homeomorphism at finite resolution: flips plus relabeling."""

    def __init__(self, triangulation, flips, relabeling):
        self.triangulation = triangulation
        self.flips = tuple(flips)
        self.relabeling = dict(relabeling)

        stages = [triangulation]
        for e in self.flips:
            if not stages[-1].is_flippable(e):
                raise ValueError("flip path blocked: edge %d is self-glued" % e)
            stages.append(stages[-1].flip(e))
        self._stages = stages

        ids = sorted(self.relabeling)
        if ids != list(range(triangulation.edge_count)) or sorted(
            self.relabeling.values()
        ) != ids:
            raise ValueError("relabeling is not an edge bijection")
        final = stages[-1]
        renamed = [tuple(self.relabeling[e] for e in tri) for tri in final.triangles]
        if (
            tuple(sorted(min(t[i:] + t[:i] for i in range(3)) for t in renamed))
            != triangulation.canonical_key()
        ):
            raise ValueError("relabeling does not close the flip path")

    @classmethod
    def identity(cls, triangulation):
        return cls(triangulation, [], {e: e for e in range(triangulation.edge_count)})

    def apply(self, weights):
        """Transport a weight vector; the result lives on the same triangulation."""
        w = tuple(weights)
        problems = validate_normal(self.triangulation, w)
        if problems:
            raise ValueError("; ".join(problems))
        for k, e in enumerate(self.flips):
            w = flip_weights(self._stages[k], w, e)
        out = [0] * len(w)
        for e, value in enumerate(w):
            out[self.relabeling[e]] = value
        return tuple(out)

    def inverse(self):
        """The inverse mapping class, as an explicit flip path."""
        rho = self.relabeling
        inv = {v: k for k, v in rho.items()}
        flips = [rho[f] for f in reversed(self.flips)]
        return MappingClass(self.triangulation, flips, inv)

    def compose(self, first):
        """The mapping class acting as ``self`` after ``first``."""
        if first.triangulation is not self.triangulation and (
            not first.triangulation.is_same_triangulation(self.triangulation)
        ):
            raise ValueError("mapping classes live on different triangulations")
        inv_first = {v: k for k, v in first.relabeling.items()}
        flips = list(first.flips) + [inv_first[f] for f in self.flips]
        relabeling = {e: self.relabeling[first.relabeling[e]] for e in first.relabeling}
        return MappingClass(first.triangulation, flips, relabeling)

    def is_identity_action(self, probes):
        """Whether the class fixes every probe weight vector."""
        return all(self.apply(w) == tuple(w) for w in probes)

    def to_json(self):
        return {
            "flips": list(self.flips),
            "relabeling": {str(k): v for k, v in sorted(self.relabeling.items())},
        }

    @classmethod
    def from_json(cls, triangulation, data):
        return cls(
            triangulation,
            data["flips"],
            {int(k): v for k, v in data["relabeling"].items()},
        )

    def __repr__(self):
        return "MappingClass(%d flips, relabeling %s)" % (
            len(self.flips),
            "id" if all(k == v for k, v in self.relabeling.items()) else "nontrivial",
        )


def triangulation_symmetries(tri):
    """All self-relabelings, as mapping classes with empty flip paths."""
    return [MappingClass(tri, [], rho) for rho in relabelings_onto(tri, tri)]


def random_mapping_class(tri, rng, walk=8, extra_automorphism=True):
    """A pseudorandom mapping class from a flip walk.

    Walks ``walk`` random flips out, optionally applies a random
    symmetry of the reached triangulation, and walks the mirrored path
    back; the closing relabeling is forced.  Compositions of these
    produce arbitrarily complicated classes while every intermediate
    step stays checkable.
    """
    path = []
    cur = tri
    for _ in range(walk):
        options = [e for e in range(tri.edge_count) if cur.is_flippable(e)]
        e = options[rng.randrange(len(options))]
        path.append(e)
        cur = cur.flip(e)
    autos = list(relabelings_onto(cur, cur))
    alpha = autos[rng.randrange(len(autos))] if extra_automorphism else None
    if alpha is None or all(k == v for k, v in alpha.items()):
        alpha = {e: e for e in range(tri.edge_count)}
    back = [alpha[f] for f in reversed(path)]
    inv_alpha = {v: k for k, v in alpha.items()}
    return MappingClass(tri, path + back, inv_alpha)


def load_mapping_classes(tri, path):
    """Read a JSON list of mapping classes from a file."""
    with open(path) as fh:
        data = json.load(fh)
    return [MappingClass.from_json(tri, item) for item in data]

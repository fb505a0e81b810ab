"""Topological types of compact surfaces with punctures and boundary.

A surface type is the triple (genus, punctures, boundary components).
Everything in this module is pure arithmetic on those three integers;
no triangulation data is involved.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class SurfaceType:
    """An orientable surface of finite type, up to homeomorphism."""

    genus: int
    punctures: int
    boundary: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0 or self.boundary < 0:
            raise ValueError("genus, punctures and boundary must be nonnegative: %r" % (self,))

    def euler_characteristic(self):
        """chi = 2 - 2g - n - b.  Punctures and boundary circles count alike."""
        return 2 - 2 * self.genus - self.punctures - self.boundary

    def complexity(self):
        """xi = 3g - 3 + n + b, the number of curves in a pants decomposition."""
        return 3 * self.genus - 3 + self.punctures + self.boundary

    def is_pair_of_pants(self):
        """True for genus 0 with three holes (punctures and boundary combined)."""
        return self.genus == 0 and self.punctures + self.boundary == 3

    def is_twice_punctured_disc(self):
        return (self.genus, self.punctures, self.boundary) == (0, 2, 1)

    def is_once_punctured_annulus(self):
        return (self.genus, self.punctures, self.boundary) == (0, 1, 2)

    def is_once_holed_torus(self):
        return (self.genus, self.punctures, self.boundary) == (1, 0, 1)

    def admits_essential_curves(self):
        """True when the surface carries at least one essential simple closed curve.

        The surface must have complexity >= 1, except the once-punctured
        torus and the four-holed sphere (complexity 1) which do carry
        curves; the degenerate cases are complexity <= 0.
        """
        return self.complexity() >= 1

    def holes(self):
        return self.punctures + self.boundary

    def to_json(self):
        return {"genus": self.genus, "punctures": self.punctures, "boundary": self.boundary}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["genus"]), int(obj["punctures"]), int(obj.get("boundary", 0)))

    def __str__(self):
        return "S_{%d,%d,%d}" % (self.genus, self.punctures, self.boundary)


def ambient(genus, punctures):
    """Surface type of an ambient (boundaryless) surface."""
    return SurfaceType(genus, punctures, 0)

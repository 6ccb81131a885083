"""Lattice polytopes: facets, lattice points of dilates, volume, smoothness."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cached_property

from ..errors import GeometryError
from . import geometry as geo


class LatticePolytope:
    """Full-dimensional polytope with integral vertices.

    ``facets`` holds ``(a, b)`` with ``<a, x> >= b`` and ``a`` primitive.
    """

    def __init__(self, vertices):
        pts = [geo.as_point(v) for v in vertices]
        if not pts:
            raise GeometryError("empty vertex list")
        if any(x.denominator != 1 for p in pts for x in p):
            raise GeometryError("vertices must be integral")
        self.n = len(pts[0])
        if any(len(p) != self.n for p in pts):
            raise GeometryError("vertices of mixed dimension")
        if geo.affine_rank(pts) != self.n:
            raise GeometryError("polytope is not full dimensional")
        fac = geo.facets(pts)
        self.facets = [(a, b) for a, b, _ in fac]
        # a vertex must lie on n facets with independent normals
        for i, p in enumerate(pts):
            normals = [a for a, _, idx in fac if i in idx]
            if len(normals) < self.n or geo.affine_rank([(Fraction(0),) * self.n] + normals) < self.n:
                raise GeometryError(f"{tuple(map(str, p))} is not an extreme point")
        if len(set(pts)) != len(pts):
            raise GeometryError("repeated vertex")
        self.vertices = pts

    # -- constructors -------------------------------------------------------
    @classmethod
    def segment(cls, length: int = 1) -> "LatticePolytope":
        return cls([(0,), (length,)])

    @classmethod
    def simplex(cls, n: int, scale: int = 1) -> "LatticePolytope":
        verts = [(0,) * n] + [tuple(scale if i == j else 0 for j in range(n)) for i in range(n)]
        return cls(verts)

    @classmethod
    def box(cls, *sides: int) -> "LatticePolytope":
        return cls(list(itertools.product(*[(0, s) for s in sides])))

    @classmethod
    def from_json(cls, obj) -> "LatticePolytope":
        return cls(obj["vertices"])

    def to_json(self) -> dict:
        return {"vertices": [[int(x) for x in v] for v in self.vertices]}

    # -- queries -------------------------------------------------------------
    def contains(self, x) -> bool:
        x = geo.as_point(x)
        return all(sum(p * q for p, q in zip(a, x)) >= b for a, b in self.facets)

    def lattice_points(self, m: int = 1) -> list[tuple[int, ...]]:
        """Integer points of ``m * self`` in lexicographic order (bounding box scan)."""
        if m < 1:
            raise ValueError("m must be a positive integer")
        lo = [min(v[i] for v in self.vertices) * m for i in range(self.n)]
        hi = [max(v[i] for v in self.vertices) * m for i in range(self.n)]
        ranges = [range(int(a), int(b) + 1) for a, b in zip(lo, hi)]
        facets = [(a, b * m) for a, b in self.facets]
        return [
            u for u in itertools.product(*ranges)
            if all(sum(p * q for p, q in zip(a, u)) >= b for a, b in facets)
        ]

    def count(self, m: int = 1) -> int:
        return len(self.lattice_points(m))

    @cached_property
    def volume(self) -> Fraction:
        return geo.volume(self.vertices)

    @cached_property
    def smooth(self) -> bool:
        """Every vertex cone is simple and spanned by a lattice basis."""
        for i, p in enumerate(self.vertices):
            tight = {j for j, (a, b) in enumerate(self.facets) if sum(x * y for x, y in zip(a, p)) == b}
            edges = []
            for k, q in enumerate(self.vertices):
                if k == i:
                    continue
                common = [self.facets[j][0] for j in tight
                          if sum(x * y for x, y in zip(self.facets[j][0], q)) == self.facets[j][1]]
                zero = (Fraction(0),) * self.n
                if len(common) >= self.n - 1 and (self.n == 1 or geo.affine_rank([zero] + common) == self.n - 1):
                    d = [int(x - y) for x, y in zip(q, p)]
                    g = 0
                    for x in d:
                        g = math.gcd(g, x)
                    edges.append([Fraction(x // g) for x in d])
            if len(edges) != self.n or abs(geo._det(edges)) != 1:
                return False
        return True

    def __repr__(self) -> str:
        verts = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"LatticePolytope([{verts}])"


def lattice_points(polytope: LatticePolytope, m: int) -> list[tuple[int, ...]]:
    return polytope.lattice_points(m)

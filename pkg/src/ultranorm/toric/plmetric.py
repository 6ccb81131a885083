"""Piecewise-linear toric metrics on the polytope side, their envelopes and duals.

A :class:`PLMetric` is a finite list of data points ``(u, value)`` with
``u`` in the polytope.  Its envelope ``theta_hat`` is the smallest concave
function above the data, represented as ``min_j (a_j + g_j.u)`` over the
supporting affine functions touching the graph along a full-dimensional cell.

On the fan side the metric is the max-affine function
``phi(x) = max_u (<u, x> + theta(u))``, so that
``theta_hat(u) = min_x (phi(x) - <u, x>)`` and the linearity cell of ``a_j + g_j.u``
corresponds to the vertex ``x_j = -g_j`` of the fan-side subdivision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..errors import GeometryError, NotConcaveError
from . import geometry as geo
from .polytope import LatticePolytope


@dataclass(frozen=True)
class AffinePiece:
    a: Fraction
    g: tuple

    def __call__(self, u) -> Fraction:
        return self.a + sum(x * y for x, y in zip(self.g, u))


class PLMetric:
    """Toric PL metric given by data points on a lattice polytope."""

    def __init__(self, polytope: LatticePolytope, data, concavified: bool = False):
        self.polytope = polytope
        pts = {}
        for u, val in data:
            u = geo.as_point(u)
            if len(u) != polytope.n:
                raise GeometryError("data point of the wrong dimension")
            if not polytope.contains(u):
                raise GeometryError(f"data point {tuple(map(str, u))} lies outside the polytope")
            val = Fraction(val)
            # repeated points: the envelope only sees the largest value
            pts[u] = max(val, pts[u]) if u in pts else val
        missing = [v for v in polytope.vertices if v not in pts]
        if missing:
            raise GeometryError("data must assign a value to every vertex of the polytope")
        self.points = list(pts)
        self.values = [pts[u] for u in self.points]
        self.concavified = concavified

    # -- construction --------------------------------------------------------
    @classmethod
    def from_function(cls, polytope: LatticePolytope, points, f) -> "PLMetric":
        return cls(polytope, [(u, f(u)) for u in points])

    @classmethod
    def constant(cls, polytope: LatticePolytope, c=0) -> "PLMetric":
        return cls(polytope, [(v, c) for v in polytope.vertices], concavified=True)

    @classmethod
    def from_json(cls, obj, polytope: LatticePolytope | None = None) -> "PLMetric":
        poly = polytope or LatticePolytope.from_json(obj)
        return cls(poly, [(d["u"], Fraction(str(d["value"]))) for d in obj["theta"]],
                   concavified=bool(obj.get("concavified", False)))

    def to_json(self) -> dict:
        return {
            "vertices": self.polytope.to_json()["vertices"],
            "theta": [{"u": [str(x) for x in u], "value": str(v)} for u, v in zip(self.points, self.values)],
            "concavified": self.concavified,
        }

    def shifted(self, c) -> "PLMetric":
        c = Fraction(c)
        return PLMetric(self.polytope, [(u, v + c) for u, v in zip(self.points, self.values)], self.concavified)

    def scaled(self, s) -> "PLMetric":
        s = Fraction(s)
        if s <= 0:
            raise ValueError("scale must be positive")
        return PLMetric(self.polytope, [(u, v * s) for u, v in zip(self.points, self.values)], self.concavified)

    def pointwise_max(self, other: "PLMetric") -> "PLMetric":
        """Data of ``max(theta_hat, other.theta_hat)`` sampled on both data sets.

        Only its envelope is meaningful; the max of two concave functions is
        generally not concave.
        """
        _same_polytope(self, other)
        pts = list(dict.fromkeys(self.points + other.points))
        return PLMetric(self.polytope, [(u, max(self.hat(u), other.hat(u))) for u in pts])

    # -- envelope -------------------------------------------------------------
    @cached_property
    def pieces(self) -> list[AffinePiece]:
        """Supporting affine functions of the upper concave envelope, one per maximal cell."""
        n = self.polytope.n
        out = {}
        for combo in itertools.combinations(range(len(self.points)), n + 1):
            aff = geo.affine_through([self.points[i] for i in combo], [self.values[i] for i in combo])
            if aff is None:
                continue
            piece = AffinePiece(*aff)
            if piece in out:
                continue
            if all(piece(u) >= v for u, v in zip(self.points, self.values)):
                out[piece] = None
        return sorted(out, key=lambda p: (p.g, p.a))

    @cached_property
    def cells(self) -> list[list[tuple]]:
        """Data points on each supporting piece (vertices of the linearity cells)."""
        return [[u for u, v in zip(self.points, self.values) if p(u) == v] for p in self.pieces]

    def hat(self, u) -> Fraction:
        """Value of the concave envelope at ``u``."""
        u = geo.as_point(u)
        return min(p(u) for p in self.pieces)

    def __call__(self, u) -> Fraction:
        return self.hat(u)

    @cached_property
    def integral(self) -> Fraction:
        """Exact integral of the envelope over the polytope, cell by cell."""
        total = Fraction(0)
        for piece, cell in zip(self.pieces, self.cells):
            for s in geo.triangulate(cell):
                total += geo.integrate_affine([cell[i] for i in s], piece.a, piece.g)
        return total

    def sup(self) -> Fraction:
        return max(self.hat(u) for u in self.breakpoints())

    def inf(self) -> Fraction:
        return min(self.hat(v) for v in self.polytope.vertices)

    def is_concave(self) -> bool:
        return all(self.hat(u) == v for u, v in zip(self.points, self.values))

    def breakpoints(self) -> list[tuple]:
        """Data points that are vertices of some linearity cell."""
        out = []
        for cell in self.cells:
            for u in cell:
                if u not in out and _is_vertex(u, cell):
                    out.append(u)
        return sorted(out)


def _is_vertex(u, cell) -> bool:
    others = [p for p in cell if p != u]
    if len(others) < len(u):
        return True
    try:
        fac = geo.facets(cell)
    except GeometryError:
        return True
    i = cell.index(u)
    normals = [a for a, _, idx in fac if i in idx]
    zero = (Fraction(0),) * len(u)
    return geo.affine_rank([zero] + normals) == len(u)


def _same_polytope(phi: PLMetric, psi: PLMetric) -> None:
    if phi.polytope.vertices != psi.polytope.vertices and set(phi.polytope.vertices) != set(psi.polytope.vertices):
        raise GeometryError("metrics live on different polytopes")


def envelope(phi: PLMetric) -> PLMetric:
    """Upper concave envelope, as a concavified metric on the cell vertices."""
    pts = phi.breakpoints()
    return PLMetric(phi.polytope, [(u, phi.hat(u)) for u in pts], concavified=True)


class MaxAffine:
    """Fan-side function ``x -> max_k (<u_k, x> + c_k)``."""

    def __init__(self, terms):
        self.terms = [(geo.as_point(u), Fraction(c)) for u, c in terms]

    def __call__(self, x) -> Fraction:
        x = geo.as_point(x)
        return max(c + sum(p * q for p, q in zip(u, x)) for u, c in self.terms)


def legendre(phi: PLMetric) -> MaxAffine:
    """Fan-side dual ``max_u (<u, x> + theta_hat(u))`` of a concavified metric."""
    if not phi.concavified:
        raise NotConcaveError("legendre needs a concavified metric; call envelope() first")
    return MaxAffine([(u, v) for u, v in zip(phi.points, phi.values)])


def dual_vertices(phi: PLMetric) -> list[tuple]:
    """Vertices ``x_j = -g_j`` of the fan-side subdivision, one per linearity cell."""
    return [tuple(-x for x in p.g) for p in phi.pieces]


def conjugate_at(f, u, candidates) -> Fraction:
    """``min_x (f(x) - <u, x>)`` over a finite candidate set."""
    u = geo.as_point(u)
    return min(f(x) - sum(p * q for p, q in zip(u, x)) for x in candidates)


@dataclass
class AtomicMeasure:
    atoms: list

    def __post_init__(self):
        self.atoms = [(tuple(Fraction(x) for x in p), Fraction(m)) for p, m in self.atoms]

    @property
    def points(self) -> list[tuple]:
        return [p for p, _ in self.atoms]

    @property
    def masses(self) -> list[Fraction]:
        return [m for _, m in self.atoms]

    def total(self) -> Fraction:
        return sum(self.masses, Fraction(0))

    def mass_at(self, point) -> Fraction:
        point = tuple(Fraction(x) for x in point)
        return sum((m for p, m in self.atoms if p == point), Fraction(0))

    def to_json(self) -> list:
        return [{"point": [str(x) for x in p], "mass": str(m)} for p, m in self.atoms]


def cell_volumes(phi: PLMetric) -> list[Fraction]:
    return [geo.volume(cell) for cell in phi.cells]


def ma_measure(phi: PLMetric) -> AtomicMeasure:
    """Monge-Ampere measure of the envelope: atoms at ``-g_j`` with normalized cell volumes."""
    if phi.polytope.n > 2:
        raise GeometryError("Monge-Ampere measures are supported for n <= 2")
    vol = phi.polytope.volume
    atoms = [(x, v / vol) for x, v in zip(dual_vertices(phi), cell_volumes(phi))]
    return AtomicMeasure(atoms)

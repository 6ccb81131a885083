"""Named toric instances used by the experiments, demos and acceptance suite."""

from __future__ import annotations

from fractions import Fraction as F

from ..rng import SplitMix64
from .plmetric import PLMetric
from .polytope import LatticePolytope


def _seg():
    return LatticePolytope.segment()


def _tri():
    return LatticePolytope.simplex(2)


def p1_calibration():
    """theta(u) = u on [0, 1]: energy 1/2 against the trivial metric."""
    return PLMetric(_seg(), [((0,), 0), ((1,), 1)], concavified=True)


def p1_breakpoint_half():
    """Tent with its only interior breakpoint at u = 1/2."""
    return PLMetric(_seg(), [((0,), 0), ((F(1, 2),), 1), ((1,), 0)], concavified=True)


def p1_asymmetric():
    """Two interior breakpoints, three cells of lengths 1/3, 1/2, 1/6."""
    return PLMetric(_seg(), [((0,), 0), ((F(1, 3),), 1), ((F(5, 6),), F(3, 2)), ((1,), 1)])


def p1_dip():
    """Non-concave data: the dip at 1/2 is discarded by the envelope."""
    return PLMetric(_seg(), [((0,), 0), ((F(1, 2),), -1), ((1,), 0)])


def p2_two_atom():
    """theta_hat = min(2u1, 2u2) on the unit simplex: two cells of area 1/4."""
    return PLMetric(_tri(), [((0, 0), 0), ((1, 0), 0), ((0, 1), 0), ((F(1, 2), F(1, 2)), 1)], concavified=True)


def p2_pyramid():
    """Pyramid over the unit simplex with apex at the barycenter: three cells."""
    return PLMetric(_tri(), [((0, 0), 0), ((1, 0), 0), ((0, 1), 0), ((F(1, 3), F(1, 3)), 1)], concavified=True)


def trivial(polytope):
    return PLMetric.constant(polytope, 0)


REGISTRY = {
    "p1-calibration": p1_calibration,
    "p1-breakpoint-half": p1_breakpoint_half,
    "p1-asymmetric": p1_asymmetric,
    "p1-dip": p1_dip,
    "p2-two-atom": p2_two_atom,
    "p2-pyramid": p2_pyramid,
}


def named(name: str) -> PLMetric:
    try:
        return REGISTRY[name]()
    except KeyError:
        raise ValueError(f"unknown instance {name!r}; known: {', '.join(sorted(REGISTRY))}") from None


def random_p1(rng: SplitMix64, points: int = 4, max_den: int = 12) -> PLMetric:
    """Random PL data on [0, 1]: endpoints plus interior points with rational values."""
    data = {(F(0),): rng.fraction(max_den, 2), (F(1),): rng.fraction(max_den, 2)}
    while len(data) < points + 2:
        u = F(rng.randint(1, max_den - 1), max_den)
        data[(u,)] = rng.fraction(max_den, 2)
    return PLMetric(_seg(), list(data.items()))


def random_p2(rng: SplitMix64, points: int = 3, max_den: int = 6) -> PLMetric:
    """Random PL data on the unit simplex."""
    tri = _tri()
    data = {v: rng.fraction(max_den, 2) for v in tri.vertices}
    while len(data) < points + 3:
        a, b = rng.randint(0, max_den), rng.randint(0, max_den)
        if a + b <= max_den:
            data[(F(a, max_den), F(b, max_den))] = rng.fraction(max_den, 2)
    return PLMetric(tri, list(data.items()))

"""Sup-norms, Monge-Ampere energy, transfinite diameter and the pull-back identity."""

from __future__ import annotations

from fractions import Fraction

from ..graded import GradedNormPair
from ..norms import DiagonalNorm
from ..scalars import TrivialQ, ValuedField
from . import geometry as geo
from .plmetric import PLMetric, _same_polytope, envelope


def sup_norm_weights(phi: PLMetric, m: int, field: ValuedField = TrivialQ) -> DiagonalNorm:
    """Sup-norm of ``m phi`` on the monomial basis of ``m Delta``: weight ``m theta_hat(u/m)``."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    weights = [m * phi.hat(tuple(Fraction(x, m) for x in u)) for u in phi.polytope.lattice_points(m)]
    return DiagonalNorm.standard(field, weights)


def toric_pair(phi: PLMetric, psi: PLMetric, field: ValuedField = TrivialQ, m_max: int | None = None) -> GradedNormPair:
    """Graded pair of sup-norms of ``phi`` and ``psi``.

    The closeness constant bounds ``|theta_hat_phi - theta_hat_psi|`` by
    ``max(sup phi - inf psi, sup psi - inf phi)``.
    """
    _same_polytope(phi, psi)
    close = max(abs(phi.sup() - psi.inf()), abs(psi.sup() - phi.inf()))
    return GradedNormPair(
        lambda m: (sup_norm_weights(phi, m, field), sup_norm_weights(psi, m, field)),
        description="toric sup-norms",
        m_max=m_max,
        closeness=close,
    )


def energy(phi: PLMetric, psi: PLMetric) -> Fraction:
    """``E(P(phi), P(psi)) = vol(Delta)^-1 * integral of (theta_hat_phi - theta_hat_psi)``.

    Each envelope is integrated on its own cells; linearity of the integral
    makes a common refinement unnecessary.
    """
    _same_polytope(phi, psi)
    return (phi.integral - psi.integral) / phi.polytope.volume


def energy_by_halfspaces(phi: PLMetric, psi: PLMetric) -> Fraction:
    """Same quantity as :func:`energy`, integrating ``min_j A_j`` over H-representation regions."""
    _same_polytope(phi, psi)
    hs = phi.polytope.facets
    a = geo.integrate_min_affine(hs, [(p.a, p.g) for p in phi.pieces])
    b = geo.integrate_min_affine(hs, [(p.a, p.g) for p in psi.pieces])
    return (a - b) / phi.polytope.volume


def ma_finite_differences(phi: PLMetric, eps) -> list[Fraction]:
    """Energy difference quotients, one per atom of :func:`ma_measure`.

    Lowering the fan-side function by ``eps`` at the atom ``x_j`` replaces the
    envelope by ``min(theta_hat, A_j - eps)``, and
    ``(E(phi) - E(phi_eps)) / eps = mass_j + O(eps)``.
    """
    eps = Fraction(eps)
    hs = phi.polytope.facets
    base = [(p.a, p.g) for p in phi.pieces]
    vol = phi.polytope.volume
    out = []
    for p in phi.pieces:
        lowered = geo.integrate_min_affine(hs, base + [(p.a - eps, p.g)])
        out.append((phi.integral - lowered) / vol / eps)
    return out


def transfinite_diameter(phi: PLMetric, psi: PLMetric) -> Fraction:
    """``-log delta_inf,psi(phi)`` in valuation units, equal to the energy."""
    return energy(phi, psi)


def canonical_metric(polytope) -> PLMetric:
    """Equilibrium metric of the multiplication maps: ``theta = 0``."""
    return PLMetric.constant(polytope, 0)


def pullback(phi: PLMetric, d: int) -> PLMetric:
    """``d^-1 f^* phi`` for multiplication by ``d``: ``theta -> theta / d``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return phi.scaled(Fraction(1, d))


def pullback_check(phi: PLMetric, psi: PLMetric, d: int) -> dict:
    """Both sides of the pull-back identity in the ``-log delta`` normalization.

    ``lhs = -log delta(d^-1 f^* phi)`` and
    ``rhs = (1 - 1/d) E(phi_f, P(psi)) + (1/d) (-log delta(phi))``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    _same_polytope(phi, psi)
    lhs = transfinite_diameter(pullback(phi, d), psi)
    can = canonical_metric(phi.polytope)
    rhs = (1 - Fraction(1, d)) * energy(can, envelope(psi)) + Fraction(1, d) * transfinite_diameter(phi, psi)
    return {"lhs": lhs, "rhs": rhs}


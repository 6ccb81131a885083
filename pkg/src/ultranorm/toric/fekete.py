"""Vandermonde maxima over monomial points: m-diameters and Fekete configurations.

At monomial points the section ``s_u`` has ``log|s_u(x)| = <u, x>``, so the
log of the metrized Vandermonde term for an assignment ``u_i -> x_sigma(i)`` is
``sum_i (<u_i, x_sigma(i)> - m phi(x_sigma(i)))``.  The monomials are distinct,
so the ultrametric determinant equals the largest term, and points may repeat
(product of monomial points).  The optimum is then a row-wise argmax: each
monomial picks its best candidate.  Ties are kept (lowest candidate index)
and counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DimensionMismatchError, GeometryError
from ..norms import DiagonalNorm
from ..volumes import det_norm
from .plmetric import AtomicMeasure, PLMetric, dual_vertices, envelope, legendre


def candidates(phi: PLMetric, levels: int = 1) -> list[tuple]:
    """Dual-subdivision vertices of the envelope, then ``levels`` rounds of pairwise midpoints."""
    pts = list(dual_vertices(phi))
    for _ in range(levels):
        new = []
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                mid = tuple((a + b) / 2 for a, b in zip(pts[i], pts[j]))
                if mid not in pts and mid not in new:
                    new.append(mid)
        pts.extend(new)
    return pts


@dataclass
class Assignment:
    monomials: list
    points: list
    choice: list       # candidate index per monomial
    value: Fraction    # V*, the log of the largest Vandermonde term
    ties: int          # monomials whose best candidate is not unique


def score_matrix(phi: PLMetric, m: int, cands: list[tuple]) -> tuple[list, list[list[Fraction]]]:
    """Monomials of degree m and the scores ``<u, x> - m phi(x)`` against each candidate."""
    fan = legendre(envelope(phi))
    cost = [m * fan(x) for x in cands]
    monos = phi.polytope.lattice_points(m)
    rows = [[sum(a * b for a, b in zip(u, x)) - c for x, c in zip(cands, cost)] for u in monos]
    return monos, rows


def vandermonde_assignment(phi: PLMetric, m: int, cands: list[tuple] | None = None) -> Assignment:
    if cands is None:
        cands = candidates(phi)
    monos, rows = score_matrix(phi, m, cands)
    choice, value, ties = [], Fraction(0), 0
    for row in rows:
        best = max(row)
        j = row.index(best)
        if row.count(best) > 1:
            ties += 1
        choice.append(j)
        value += best
    return Assignment(monos, cands, choice, value, ties)


def m_diameter(phi: PLMetric, m: int, ref: DiagonalNorm, cands: list[tuple] | None = None) -> Fraction:
    """``-log delta_m`` in valuation units, normalized by ``m N_m``.

    Equals ``(-det_norm(ref) - V*) / (m N_m)`` with ``V*`` from
    :func:`vandermonde_assignment`.
    """
    a = vandermonde_assignment(phi, m, cands)
    n = len(a.monomials)
    if ref.dim != n:
        raise DimensionMismatchError(f"reference norm has dimension {ref.dim}, expected N_m = {n}")
    return (-det_norm(ref) - a.value) / (m * n)


def fekete_search(phi: PLMetric, m: int, cands: list[tuple] | None = None) -> tuple[list[tuple], AtomicMeasure]:
    """Optimal configuration (one point per monomial) and its empirical measure."""
    if phi.polytope.n > 2:
        raise GeometryError("Fekete configurations are supported for n <= 2")
    a = vandermonde_assignment(phi, m, cands)
    config = [a.points[j] for j in a.choice]
    n = len(config)
    counts: dict[int, int] = {}
    for j in a.choice:
        counts[j] = counts.get(j, 0) + 1
    atoms = [(a.points[j], Fraction(c, n)) for j, c in sorted(counts.items())]
    return config, AtomicMeasure(atoms)

"""Determinant norms, relative volumes, successive minima and contents.

Conventions (valuation units, larger = smaller vector):

* ``det_norm(n)`` is the value of the standard generator ``e_1 ^ ... ^ e_N`` of
  the determinant line, ``sum_i w_i - valuation(det B)``.
* ``relative_volume(n1, n2) = det_norm(n1) - det_norm(n2)``, which is the log of
  ``det||.||_2 / det||.||_1``; scaling ``n2`` by ``e^c`` adds ``N c``.
* ``successive_minima(n1, n2)`` are the jumps ``nu1(e_i) - nu2(e_i)`` over a joint
  orthogonal basis, sorted in decreasing order.  They sum to the relative volume.
"""

from __future__ import annotations

from fractions import Fraction

from . import _linalg as la
from .errors import ContainmentError, TrivialValuationError
from .norms import DiagonalNorm, _as_vectors, _check_pair, codiagonalize, lattice_norm

__all__ = ["det_norm", "relative_volume", "successive_minima", "content"]


def det_norm(n: DiagonalNorm) -> Fraction:
    """Value of ``det n`` on the standard generator of the determinant line."""
    total = sum(n.weights, Fraction(0))
    if n.vectors is None:
        return total
    return total - n.field.v(la.det(n.matrix, n.field))


def relative_volume(n1: DiagonalNorm, n2: DiagonalNorm) -> Fraction:
    _check_pair(n1, n2)
    if n1.vectors == n2.vectors:
        return sum(n1.weights, Fraction(0)) - sum(n2.weights, Fraction(0))
    return det_norm(n1) - det_norm(n2)


def successive_minima(n1: DiagonalNorm, n2: DiagonalNorm) -> list[Fraction]:
    """Relative successive minima of ``n1`` with respect to ``n2``, decreasing."""
    c = codiagonalize(n1, n2, vectors=False)
    return sorted((a - b for a, b in zip(c.weights1, c.weights2)), reverse=True)


def content(outer, inner, field) -> Fraction:
    """Content (valuation-weighted length) of ``outer / inner`` for lattices given by basis vectors."""
    if field.is_trivial:
        raise TrivialValuationError("contents need a nontrivially valued field")
    go = la.transpose(_as_vectors(field, outer))
    gi = la.transpose(_as_vectors(field, inner))
    rel = la.solve(go, gi, field)
    for row in rel:
        for x in row:
            if x and field.v(x) < 0:
                raise ContainmentError("inner lattice is not contained in the outer lattice")
    return Fraction(field.v(la.det(rel, field)))


def content_via_volume(outer, inner, field) -> Fraction:
    """Same quantity as :func:`content`, computed as a relative volume of lattice norms."""
    return relative_volume(lattice_norm(field, outer), lattice_norm(field, inner))

"""Diagonalizable ultrametric norms on K^N.

A norm is stored as an orthogonal basis ``e_1, ..., e_N`` together with rational
weights ``w_i``.  Everything is reported in *valuation units*: the value of a
vector is ``nu(v) = -log||v|| / log_scale``, so that for ``v = sum a_i e_i``

    nu(v) = min_i (valuation(a_i) + w_i).

Larger values mean smaller vectors.  A shift of all weights by ``-c`` is the
norm ``e^c ||.||``.

The workhorse is :func:`_orthogonalize`, an ultrametric Gram-Schmidt step:
columns are processed in order, each one takes as pivot a coordinate attaining
its value, and that coordinate is eliminated from every later column.  The
output columns are orthogonal and each is a maximizer of ``nu`` over its coset
modulo the span of the previous ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from . import _linalg as la
from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    SingularMatrixError,
    TrivialValuationError,
)
from .scalars import ValuedField, ValuedScalar, to_fraction

__all__ = [
    "DiagonalNorm",
    "Subspace",
    "Codiagonalization",
    "eval_norm",
    "codiagonalize",
    "dGI",
    "dual",
    "restrict",
    "quotient",
    "annihilator",
    "coset_max",
    "gram_schmidt_project",
    "lattice_norm",
    "sup_ratio",
    "same_norm",
]

INF = math.inf


@dataclass(frozen=True, eq=False)
class DiagonalNorm:
    """Ultrametric norm diagonal in ``vectors`` with weights ``weights``.

    ``vectors`` holds the orthogonal basis as a tuple of raw coordinate vectors
    (in the standard basis of K^N); ``None`` stands for the standard basis.
    Build instances with :meth:`make` or :meth:`standard`, which coerce input.
    """

    field: ValuedField
    vectors: tuple | None
    weights: tuple

    @classmethod
    def make(cls, field: ValuedField, vectors, weights) -> "DiagonalNorm":
        weights = tuple(to_fraction(w) for w in weights)
        n = len(weights)
        if vectors is None:
            return cls(field, None, weights)
        vecs = tuple(tuple(field.coerce(x) for x in vec) for vec in vectors)
        if len(vecs) != n or any(len(v) != n for v in vecs):
            raise DimensionMismatchError("basis must be N vectors of length N")
        if not la.det(vecs, field):
            raise SingularMatrixError("basis vectors are linearly dependent")
        return cls(field, vecs, weights)

    @classmethod
    def standard(cls, field: ValuedField, weights) -> "DiagonalNorm":
        return cls.make(field, None, weights)

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def is_standard_basis(self) -> bool:
        return self.vectors is None

    def basis_vectors(self) -> list[list]:
        """Orthogonal basis as raw column vectors."""
        if self.vectors is None:
            return la.identity(self.dim, self.field)
        return [list(v) for v in self.vectors]

    @cached_property
    def matrix(self):
        """Row-major N x N matrix whose columns are the basis vectors."""
        return la.transpose(self.basis_vectors())

    @cached_property
    def _inverse(self):
        if self.vectors is None:
            return None
        return la.inverse(self.matrix, self.field)

    def coords(self, v):
        """Coordinates of the raw vector ``v`` in the orthogonal basis."""
        if self.vectors is None:
            return list(v)
        return la.matvec(self._inverse, v, self.field)

    def from_coords(self, a):
        if self.vectors is None:
            return list(a)
        return la.matvec(self.matrix, a, self.field)

    def value_of_coords(self, a):
        v = self.field.v
        best = INF
        for x, w in zip(a, self.weights):
            if x:
                val = v(x) + w
                if val < best:
                    best = val
        return best

    def __call__(self, vector):
        return eval_norm(self, vector)

    def shifted(self, c) -> "DiagonalNorm":
        """The norm with every weight increased by ``c`` (that is, ``e^{-c}||.||``)."""
        c = to_fraction(c)
        return DiagonalNorm(self.field, self.vectors, tuple(w + c for w in self.weights))

    def to_json(self) -> dict:
        vecs = self.basis_vectors()
        return {
            "field": self.field.to_json(),
            "basis": [[self.field.raw_to_json(x) for x in v] for v in vecs],
            "weights": [str(w) for w in self.weights],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DiagonalNorm":
        extra = set(obj) - {"field", "basis", "weights"}
        if extra:
            raise ValueError(f"unknown norm keys: {', '.join(sorted(extra))}")
        field = ValuedField.parse(obj["field"])
        basis = obj.get("basis")
        return cls.make(field, basis, obj["weights"])

    def __repr__(self) -> str:
        w = ", ".join(str(x) for x in self.weights)
        return f"DiagonalNorm({self.field}, dim={self.dim}, weights=[{w}])"


@dataclass(frozen=True)
class Subspace:
    """Subspace of K^N spanned by linearly independent raw vectors."""

    field: ValuedField
    vectors: tuple

    @classmethod
    def make(cls, field: ValuedField, vectors) -> "Subspace":
        vecs = tuple(tuple(field.coerce(x) for x in v) for v in vectors)
        if vecs and la.rank([list(v) for v in vecs], field) != len(vecs):
            raise SingularMatrixError("spanning vectors are linearly dependent")
        return cls(field, vecs)

    @property
    def dim(self) -> int:
        return len(self.vectors)


class Codiagonalization(NamedTuple):
    vectors: list
    weights1: list
    weights2: list

    def norms(self, field: ValuedField) -> tuple[DiagonalNorm, DiagonalNorm]:
        return (
            DiagonalNorm.make(field, self.vectors, self.weights1),
            DiagonalNorm.make(field, self.vectors, self.weights2),
        )


def _check_pair(n1: DiagonalNorm, n2: DiagonalNorm) -> None:
    if n1.field != n2.field:
        raise FieldMismatchError(f"norms over {n1.field} and {n2.field}")
    if n1.dim != n2.dim:
        raise DimensionMismatchError(f"dimensions {n1.dim} and {n2.dim}")


def _raw_vector(norm: DiagonalNorm, vector) -> list:
    if len(vector) != norm.dim:
        raise DimensionMismatchError(f"vector of length {len(vector)} for a norm on K^{norm.dim}")
    return [norm.field.coerce(x) for x in vector]


def _as_vectors(field, W) -> list:
    if isinstance(W, Subspace):
        if W.field != field:
            raise FieldMismatchError("subspace over a different field")
        return [list(v) for v in W.vectors]
    return [[field.coerce(x) for x in v] for v in W]


def eval_norm(n: DiagonalNorm, vector: Sequence) -> Fraction | float:
    """Value ``nu(v)`` of a vector, in valuation units (``inf`` for zero)."""
    return n.value_of_coords(n.coords(_raw_vector(n, vector)))


def _orthogonalize(n: DiagonalNorm, vectors: list):
    """Ultrametric Gram-Schmidt of raw ambient ``vectors`` with respect to ``n``.

    Returns ``(coords, values, T)``: the orthogonalized vectors in the
    coordinates of ``n``'s basis, their values, and the unitriangular change of
    basis ``T`` (list of columns) with ``out_j = sum_i T[j][i] * vectors[i]``.
    """
    return _orthogonalize_coords(n.field, n.weights, [n.coords(vec) for vec in vectors])


def _orthogonalize_coords(field, weights, cols):
    """:func:`_orthogonalize` on vectors already given in the norm's coordinates."""
    v = field.v
    zero, one = field.zero, field.one
    cols = list(cols)
    k = len(cols)
    T = [[one if i == j else zero for i in range(k)] for j in range(k)]
    values = []
    for j in range(k):
        col = cols[j]
        best, piv_row = INF, None
        for i, x in enumerate(col):
            if x:
                val = v(x) + weights[i]
                if val < best:
                    best, piv_row = val, i
        if piv_row is None:
            raise SingularMatrixError("vectors are linearly dependent")
        values.append(best)
        piv = col[piv_row]
        tj = T[j]
        for l in range(j + 1, k):
            c = cols[l][piv_row]
            if c:
                f = c / piv
                cols[l] = [x - f * y if y else x for x, y in zip(cols[l], col)]
                T[l] = [x - f * y if y else x for x, y in zip(T[l], tj)]
    return cols, values, T


def coset_max(n: DiagonalNorm, v, W) -> Fraction | float:
    """``max_{w in W} nu(v + w)``, the quotient value of ``v`` modulo ``W``."""
    vecs = _as_vectors(n.field, W) + [_raw_vector(n, v)]
    try:
        _, values, _ = _orthogonalize(n, vecs)
    except SingularMatrixError:
        return INF
    return values[-1]


def restrict(n: DiagonalNorm, W) -> DiagonalNorm:
    """Restriction of ``n`` to ``W``, as a norm on K^k in the coordinates of W's spanning vectors."""
    vecs = _as_vectors(n.field, W)
    if not vecs:
        raise DimensionMismatchError("cannot restrict to the zero subspace")
    if any(len(v) != n.dim for v in vecs):
        raise DimensionMismatchError("subspace vectors have the wrong length")
    try:
        _, values, T = _orthogonalize(n, vecs)
    except SingularMatrixError as exc:
        raise SingularMatrixError("spanning vectors of W are rank deficient") from exc
    return DiagonalNorm.make(n.field, T, values)


def annihilator(field: ValuedField, W) -> list:
    """Basis ``z_1..z_{N-k}`` of the forms vanishing on ``W``.

    The quotient ``K^N / W`` is identified with K^{N-k} through
    ``v -> (<z_1, v>, ..., <z_{N-k}, v>)``; this is the identification used by
    :func:`quotient`.
    """
    vecs = _as_vectors(field, W)
    if not vecs:
        raise DimensionMismatchError("annihilator of an empty spanning set is ambiguous")
    return la.nullspace(vecs, field)


def quotient(n: DiagonalNorm, W) -> DiagonalNorm:
    """Quotient norm on ``K^N / W`` (coordinates given by :func:`annihilator`)."""
    vecs = _as_vectors(n.field, W)
    if not vecs:
        return n
    if la.rank(vecs, n.field) != len(vecs):
        raise SingularMatrixError("spanning vectors of W are rank deficient")
    if len(vecs) >= n.dim:
        raise DimensionMismatchError("quotient by the whole space")
    Z = annihilator(n.field, vecs)
    return dual(restrict(dual(n), Z))


def dual(n: DiagonalNorm) -> DiagonalNorm:
    """Dual norm: diagonal in the dual basis ``(B^-1)^T`` with weights ``-w``."""
    neg = tuple(-w for w in n.weights)
    if n.vectors is None:
        return DiagonalNorm(n.field, None, neg)
    # columns of (B^-1)^T are the rows of B^-1
    return DiagonalNorm(n.field, tuple(tuple(r) for r in n._inverse), neg)


def gram_schmidt_project(n: DiagonalNorm, E) -> DiagonalNorm:
    """Gram-Schmidt projection of ``n`` onto the apartment of the ordered basis ``E``."""
    vecs = _as_vectors(n.field, E)
    if len(vecs) != n.dim:
        raise DimensionMismatchError("E must contain N vectors")
    try:
        _, values, _ = _orthogonalize(n, vecs)
    except SingularMatrixError as exc:
        raise SingularMatrixError("E is singular") from exc
    return DiagonalNorm.make(n.field, vecs, values)


def lattice_norm(field: ValuedField, G) -> DiagonalNorm:
    """Norm whose unit ball is the lattice spanned by the columns ``G`` (given as vectors)."""
    if field.is_trivial:
        raise TrivialValuationError("lattice norms need a nontrivially valued field")
    vecs = _as_vectors(field, G)
    return DiagonalNorm.make(field, vecs, [0] * len(vecs))


def sup_ratio(n1: DiagonalNorm, n2: DiagonalNorm) -> Fraction:
    """``sup_v (nu1(v) - nu2(v))``, attained on the orthogonal basis of ``n1``."""
    _check_pair(n1, n2)
    best = None
    for e, w in zip(n1.basis_vectors(), n1.weights):
        r = w - n2.value_of_coords(n2.coords(e))
        if best is None or r > best:
            best = r
    return best


def dGI(n1: DiagonalNorm, n2: DiagonalNorm) -> Fraction:
    """Goldman-Iwahori distance in valuation units, from the two orthogonal bases."""
    return max(sup_ratio(n1, n2), sup_ratio(n2, n1))


def same_norm(n1: DiagonalNorm, n2: DiagonalNorm) -> bool:
    return dGI(n1, n2) == 0


def codiagonalize(n1: DiagonalNorm, n2: DiagonalNorm, vectors: bool = True) -> Codiagonalization:
    """Joint orthogonal basis of two norms.

    ``g`` is an ``n1``-orthogonal basis of the current subspace U (initially the
    basis of ``n1``) and ``M[l][i]`` is the i-th coordinate of ``g_l`` in the
    orthogonal basis ``f`` of ``n2``.  With ``s(i, l) = v(M[l][i]) + w2_i - nu1(g_l)``:

    * ``v = g_l`` for the ``l`` minimizing ``min_i s(i, l)`` maximizes
      ``nu1 - nu2`` over the orthogonal basis of ``n1``;
    * the dual form ``mu = f_i^*`` with ``i`` attaining that minimum attains
      ``nu2(v)``;
    * clearing row ``i`` from the other ``g_l`` (they stay ``n1``-orthogonal
      because the pivot is minimal) gives a basis of ``ker mu`` and
      ``U = Kv + ker mu`` is orthogonal for both norms.

    Recursing on ``ker mu`` is full pivoting on ``M`` with pivots minimizing
    ``s``, lowest ``(l, i)`` on ties.  Output vectors are rescaled to primitive
    integral (polynomial) vectors.  With ``vectors=False`` only the weights are
    computed and ``vectors`` is None.
    """
    _check_pair(n1, n2)
    field = n1.field
    if n1.vectors == n2.vectors:
        vecs = n1.basis_vectors() if vectors else None
        return Codiagonalization(vecs, list(n1.weights), list(n2.weights))

    v = field.v
    amb = n1.basis_vectors() if vectors else None
    if n2.vectors is None:
        M = [list(c) for c in amb]
    else:
        M = la.transpose(la.solve(n2.matrix, n1.matrix, field))
    vals1 = list(n1.weights)
    w2 = n2.weights
    rows = list(range(n1.dim))
    cols = list(range(n1.dim))
    out_vecs, out1, out2 = [], [], []
    while cols:
        best, pl, pi = None, None, None
        for l in cols:
            col = M[l]
            for i in rows:
                x = col[i]
                if x:
                    s = v(x) + w2[i] - vals1[l]
                    if best is None or s < best:
                        best, pl, pi = s, l, i
        if pl is None:
            raise SingularMatrixError("basis of n1 is singular")
        pcol = M[pl]
        piv = pcol[pi]
        if vectors:
            pamb = amb[pl]
            out_vecs.append(pamb)
        out1.append(vals1[pl])
        out2.append(vals1[pl] + best)
        cols.remove(pl)
        rows.remove(pi)
        for l in cols:
            c = M[l][pi]
            if c:
                f = c / piv
                col = M[l]
                for i in rows:
                    y = pcol[i]
                    if y:
                        col[i] = col[i] - f * y
                if vectors:
                    amb[l] = [x - f * y if y else x for x, y in zip(amb[l], pamb)]
    if not vectors:
        return Codiagonalization(None, out1, out2)
    # rescale each joint vector to a primitive one; both weights move by v(c)
    for k, vec in enumerate(out_vecs):
        c = field.primitive_multiplier(vec)
        out_vecs[k] = [x * c if x else x for x in vec]
        out1[k] += v(c)
        out2[k] += v(c)
    return Codiagonalization(out_vecs, out1, out2)

"""Building metrics ``dist_chi`` and majorization of successive-minima vectors."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

import gmpy2

from .errors import DimensionMismatchError
from .norms import DiagonalNorm
from .volumes import successive_minima

__all__ = ["Chi", "chi_norm", "chi_norm_squared", "chi_distance", "majorizes", "L2_PRECISION"]

L2_PRECISION = 128


class Chi(enum.Enum):
    """Permutation-invariant norms on Q^N."""

    L1 = "l1"
    L2 = "l2"
    LINF = "linf"

    @classmethod
    def parse(cls, name) -> "Chi":
        if isinstance(name, Chi):
            return name
        key = str(name).lower().replace("∞", "inf")
        for chi in cls:
            if chi.value == key:
                return chi
        raise ValueError(f"unknown chi {name!r}; expected one of l1, l2, linf")


def chi_norm_squared(vec: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(x) * x for x in vec), Fraction(0))


def chi_norm(vec: Sequence[Fraction], chi) -> Fraction | gmpy2.mpfr:
    """``chi(vec)``: exact for l1/linf, a 128-bit float for l2."""
    chi = Chi.parse(chi)
    if chi is Chi.L1:
        return sum((abs(Fraction(x)) for x in vec), Fraction(0))
    if chi is Chi.LINF:
        return max((abs(Fraction(x)) for x in vec), default=Fraction(0))
    sq = chi_norm_squared(vec)
    with gmpy2.context(precision=L2_PRECISION):
        return gmpy2.sqrt(gmpy2.mpq(sq.numerator, sq.denominator))


def chi_distance(n1: DiagonalNorm, n2: DiagonalNorm, chi) -> Fraction | gmpy2.mpfr:
    return chi_norm(successive_minima(n1, n2), chi)


def majorizes(lam: Sequence[Fraction], mu: Sequence[Fraction]) -> bool:
    """True iff ``lam`` is majorized by ``mu`` (partial sums of lam <= those of mu, equal totals).

    Both sequences are sorted decreasingly first.
    """
    if len(lam) != len(mu):
        raise DimensionMismatchError("majorization needs sequences of equal length")
    a = sorted((Fraction(x) for x in lam), reverse=True)
    b = sorted((Fraction(x) for x in mu), reverse=True)
    sa = sb = Fraction(0)
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return sa == sb

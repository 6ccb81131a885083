"""Pairs of graded norms, scaled relative volumes and limit extrapolation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from scipy import stats

from .norms import DiagonalNorm, dGI
from .volumes import relative_volume, successive_minima

__all__ = ["GradedNormPair", "scaled_volume", "jumping_values", "estimate_limit", "Limit", "jump_ks_statistic"]


@dataclass
class GradedNormPair:
    """Degree-indexed pair of norms ``(n1_m, n2_m)`` on a space of dimension ``N_m``.

    ``generator(m)`` returns the two norms.  ``closeness`` is the constant ``C``
    of the linear-closeness witness ``dGI(n1_m, n2_m) <= C m``, if known.
    """

    generator: Callable[[int], tuple[DiagonalNorm, DiagonalNorm]]
    description: str = ""
    m_max: int | None = None
    closeness: Fraction | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def norms(self, m: int) -> tuple[DiagonalNorm, DiagonalNorm]:
        if not isinstance(m, int) or m < 1 or (self.m_max is not None and m > self.m_max):
            raise ValueError(f"degree {m} outside the generator range")
        if m not in self._cache:
            self._cache[m] = self.generator(m)
        return self._cache[m]

    def dim(self, m: int) -> int:
        return self.norms(m)[0].dim

    def check_closeness(self, m: int) -> bool:
        if self.closeness is None:
            return True
        n1, n2 = self.norms(m)
        return dGI(n1, n2) <= self.closeness * m

    @classmethod
    def shifted(cls, base: Callable[[int], DiagonalNorm], c, description: str = "") -> "GradedNormPair":
        """``(base_m, e^{cm} base_m)``: the weights drop by ``c m`` and the scaled volume is ``c``."""
        c = Fraction(c)
        return cls(lambda m: (base(m), base(m).shifted(-c * m)), description, closeness=abs(c))


def scaled_volume(pair: GradedNormPair, m: int) -> Fraction:
    """``vol(n1_m, n2_m) / (m N_m)``."""
    n1, n2 = pair.norms(m)
    return relative_volume(n1, n2) / (m * n1.dim)


def jumping_values(pair: GradedNormPair, m: int) -> list[Fraction]:
    n1, n2 = pair.norms(m)
    return successive_minima(n1, n2)


def jump_ks_statistic(pair: GradedNormPair, m1: int, m2: int) -> float:
    """Two-sample KS statistic between the normalized jumps at degrees m1 and m2."""
    a = [float(x / m1) for x in jumping_values(pair, m1)]
    b = [float(x / m2) for x in jumping_values(pair, m2)]
    return float(stats.ks_2samp(a, b).statistic)


@dataclass(frozen=True)
class Limit:
    estimate: float
    error_bound: float


def estimate_limit(samples: Sequence[tuple[int, object]]) -> Limit:
    """Richardson extrapolation under ``value_m = L + a/m + o(1/m)``.

    Consecutive samples give extrapolants ``(m2 v2 - m1 v1) / (m2 - m1)``; the
    estimate is the last one and the error bound is the spread of the last three
    (of the last two when only three samples are given).
    """
    pts = [(int(m), Fraction(v) if not isinstance(v, float) else v) for m, v in samples]
    if len(pts) < 3:
        raise ValueError("estimate_limit needs at least 3 samples")
    if any(b[0] <= a[0] for a, b in zip(pts, pts[1:])):
        raise ValueError("samples must have strictly increasing m")
    ext = [(m2 * v2 - m1 * v1) / (m2 - m1) for (m1, v1), (m2, v2) in zip(pts, pts[1:])]
    tail = [float(x) for x in ext[-3:]]
    return Limit(float(ext[-1]), max(tail) - min(tail))

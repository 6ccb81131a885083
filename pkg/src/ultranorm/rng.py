"""Seeded SplitMix64 generator and random instances for the fuzz suites.

SplitMix64 contract: 64-bit state, increment ``0x9E3779B97F4A7C15``, output
mix ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
z *= 0x94D049BB133111EB; z ^= z >> 31`` (all arithmetic mod 2**64).
Bounded integers use rejection sampling, so streams are identical across
implementations of the same contract.
"""

from __future__ import annotations

from fractions import Fraction

from . import _linalg as la
from .norms import DiagonalNorm
from .scalars import RatFunc, ValuedField

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def fraction(self, max_den: int = 12, span: int = 3) -> Fraction:
        """Rational with denominator <= max_den and absolute value <= span."""
        den = self.randint(1, max_den)
        return Fraction(self.randint(-span * den, span * den), den)


def random_scalar(field: ValuedField, rng: SplitMix64, allow_zero: bool = True):
    """Small random raw element of ``field`` with a spread of valuations."""
    while True:
        if field.kind == "LaurentQt":
            num = [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 2))]
            den = [Fraction(rng.randint(1, 3))] + ([Fraction(rng.randint(-2, 2))] if rng.below(3) == 0 else [])
            if not any(num):
                x = field.zero
            else:
                x = field.coerce({"num": num, "den": den})
                k = rng.randint(-2, 2)
                t = RatFunc.t()
                for _ in range(abs(k)):
                    x = x * t if k > 0 else x / t
        else:
            x = field.coerce(Fraction(rng.randint(-9, 9), rng.randint(1, 6)))
            if field.kind == "PAdicQ" and x:
                k = rng.randint(-2, 2)
                x = x * field.coerce(Fraction(field.p) ** k)
        if x or allow_zero:
            return x


def random_vector(field: ValuedField, dim: int, rng: SplitMix64) -> list:
    while True:
        v = [random_scalar(field, rng) for _ in range(dim)]
        if any(v):
            return v


def random_basis(field: ValuedField, dim: int, rng: SplitMix64) -> list:
    while True:
        vecs = [[random_scalar(field, rng) for _ in range(dim)] for _ in range(dim)]
        if la.det(vecs, field):
            return vecs


def random_weights(dim: int, rng: SplitMix64, max_den: int = 12, span: int = 3) -> list[Fraction]:
    return [rng.fraction(max_den, span) for _ in range(dim)]


def random_norm(field: ValuedField, dim: int, rng: SplitMix64, max_den: int = 12) -> DiagonalNorm:
    basis = random_basis(field, dim, rng)
    # the basis is known to be invertible, so skip make()'s determinant check
    vecs = tuple(tuple(v) for v in basis)
    return DiagonalNorm(field, vecs, tuple(random_weights(dim, rng, max_den)))

"""Exact scalars over the three supported valued fields.

Three complete valued fields are available:

* ``TrivialQ``  -- the rationals with the trivial absolute value,
* ``PAdicQ(p)`` -- the rationals with the p-adic valuation,
* ``LaurentQt`` -- rational functions in ``t`` over Q with the t-adic valuation.

Rationals are stored as :class:`gmpy2.mpq`, rational functions as
:class:`RatFunc` (a reduced quotient of two :class:`flint.fmpq_poly`).  The
algorithms in :mod:`ultranorm.norms` work directly on these raw values and ask
the field for valuations; :class:`ValuedScalar` is the user-facing wrapper.

Valuations are additive and integer valued (the value group is Z for the
discrete fields, and 0 for the trivial one).  The valuation of zero is
``math.inf``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

import flint
import gmpy2

from .errors import FieldMismatchError

__all__ = [
    "RatFunc",
    "ValuedField",
    "ValuedScalar",
    "TrivialQ",
    "PAdicQ",
    "LaurentQt",
    "valuation",
    "arith",
    "to_fraction",
]

INF = math.inf


def _is_prime(p: int) -> bool:
    return p >= 2 and gmpy2.is_prime(p)


def to_fraction(x) -> Fraction:
    """Convert an int, str, Fraction or mpq to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, type(gmpy2.mpq())):
        return Fraction(int(x.numerator), int(x.denominator))
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return Fraction(x)


def _mpq(x) -> "gmpy2.mpq":
    if isinstance(x, str):
        f = Fraction(x.strip())
        return gmpy2.mpq(f.numerator, f.denominator)
    if isinstance(x, Fraction):
        return gmpy2.mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return gmpy2.mpq(x)


_ONE_POLY = flint.fmpq_poly([1])


class RatFunc:
    """Rational function ``num/den`` in one variable t with rational coefficients.

    Always stored reduced: ``gcd(num, den) = 1`` and ``den`` monic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, flint.fmpq_poly):
            num = flint.fmpq_poly(num if isinstance(num, list) else [_fmpq(num)])
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, flint.fmpq_poly):
            den = flint.fmpq_poly(den if isinstance(den, list) else [_fmpq(den)])
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                den = _ONE_POLY
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num = num // g
                    den = den // g
                lc = den.leading_coefficient()
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self.num = num
        self.den = den

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(flint.fmpq_poly([0, 1]), _reduced=True)

    @classmethod
    def _raw(cls, num, den) -> "RatFunc":
        # caller guarantees num/den reduced with den monic
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    # Henrici-style arithmetic: gcds are taken on the operands rather than on
    # the full products, and the results come out reduced.
    def _addsub(self, onum, other: "RatFunc") -> "RatFunc":
        a, b, d = self.num, self.den, other.den
        if b == d:
            t = a + onum
            if t.is_zero():
                return RatFunc._raw(t, _ONE_POLY)
            if b.is_one():
                return RatFunc._raw(t, b)
            g = t.gcd(b)
            return RatFunc._raw(t, b) if g.is_one() else RatFunc._raw(t // g, b // g)
        g = b.gcd(d)
        if g.is_one():
            return RatFunc._raw(a * d + onum * b, b * d)
        b1, d1 = b // g, d // g
        t = a * d1 + onum * b1
        if t.is_zero():
            return RatFunc._raw(t, _ONE_POLY)
        g2 = t.gcd(g)
        if g2.is_one():
            return RatFunc._raw(t, b * d1)
        return RatFunc._raw(t // g2, (b // g2) * d1)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return self._addsub(other.num, other)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self._addsub(-other.num, other)

    @staticmethod
    def _mul_parts(a, b, c, d) -> "RatFunc":
        # (a/b)(c/d) with gcd(a,b) = gcd(c,d) = 1 and b, d monic
        if a.is_zero() or c.is_zero():
            return RatFunc._raw(flint.fmpq_poly(), _ONE_POLY)
        if not d.is_one():
            g1 = a.gcd(d)
            if not g1.is_one():
                a, d = a // g1, d // g1
        if not b.is_one():
            g2 = c.gcd(b)
            if not g2.is_one():
                c, b = c // g2, b // g2
        return RatFunc._raw(a * c, b * d)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc._mul_parts(self.num, self.den, other.num, other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        c = other.num
        if c.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        lc = c.leading_coefficient()
        if lc != 1:
            return RatFunc._mul_parts(self.num, self.den, other.den / lc, c / lc)
        return RatFunc._mul_parts(self.num, self.den, other.den, c)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((tuple(self.num.coeffs()), tuple(self.den.coeffs())).__repr__())

    def order(self):
        """t-adic order at 0 (``inf`` for zero)."""
        if self.num.is_zero():
            return INF
        return _trailing(self.num) - _trailing(self.den)

    def coefficients(self) -> tuple[list[Fraction], list[Fraction]]:
        return (
            [Fraction(int(c.p), int(c.q)) for c in self.num.coeffs()] or [Fraction(0)],
            [Fraction(int(c.p), int(c.q)) for c in self.den.coeffs()],
        )

    def __repr__(self) -> str:
        if self.den.is_one():
            return f"RatFunc({self.num.str(var='t')})"
        return f"RatFunc(({self.num.str(var='t')})/({self.den.str(var='t')}))"


def _fmpq(x):
    if isinstance(x, flint.fmpq):
        return x
    f = to_fraction(x)
    return flint.fmpq(f.numerator, f.denominator)


def _trailing(poly) -> int:
    for i, c in enumerate(poly.coeffs()):
        if c != 0:
            return i
    raise ValueError("zero polynomial has no trailing term")


_FIELD_RE = re.compile(r"^\s*(TrivialQ|LaurentQt|PAdicQ)\s*(?:\(\s*(\d+)\s*\))?\s*$")


@dataclass(frozen=True)
class ValuedField:
    """A complete valued field: ``TrivialQ``, ``PAdicQ(p)`` or ``LaurentQt``."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("TrivialQ", "PAdicQ", "LaurentQt"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "PAdicQ" and not _is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.kind != "PAdicQ" and self.p != 0:
            raise ValueError("only PAdicQ takes a prime")

    # -- descriptive data -------------------------------------------------
    @property
    def is_trivial(self) -> bool:
        return self.kind == "TrivialQ"

    @property
    def value_group_generator(self) -> Fraction:
        return Fraction(0) if self.is_trivial else Fraction(1)

    @property
    def log_scale(self) -> float:
        """Natural-log size of one valuation unit."""
        if self.kind == "PAdicQ":
            return math.log(self.p)
        return 1.0

    def __str__(self) -> str:
        return f"PAdicQ({self.p})" if self.kind == "PAdicQ" else self.kind

    @classmethod
    def parse(cls, spec) -> "ValuedField":
        """Build a field from ``"PAdicQ(2)"``-style strings or ``{"kind":..,"p":..}``."""
        if isinstance(spec, ValuedField):
            return spec
        if isinstance(spec, dict):
            return cls(spec["kind"], int(spec.get("p", 0)))
        m = _FIELD_RE.match(str(spec))
        if not m:
            raise ValueError(f"cannot parse field {spec!r}")
        return cls(m.group(1), int(m.group(2) or 0))

    def to_json(self):
        return {"kind": self.kind, "p": self.p} if self.kind == "PAdicQ" else {"kind": self.kind}

    # -- raw values ---------------------------------------------------------
    @property
    def zero(self):
        return RatFunc(0) if self.kind == "LaurentQt" else gmpy2.mpq(0)

    @property
    def one(self):
        return RatFunc(1) if self.kind == "LaurentQt" else gmpy2.mpq(1)

    @property
    def uniformizer(self):
        if self.kind == "PAdicQ":
            return gmpy2.mpq(self.p)
        if self.kind == "LaurentQt":
            return RatFunc.t()
        return None

    def coerce(self, x):
        """Convert ``x`` to this field's raw representation."""
        if isinstance(x, ValuedScalar):
            if x.field != self:
                raise FieldMismatchError(f"{x.field} element used in {self}")
            return x.raw
        if self.kind == "LaurentQt":
            if isinstance(x, RatFunc):
                return x
            if isinstance(x, dict):
                return RatFunc([_fmpq(c) for c in x["num"]], [_fmpq(c) for c in x.get("den", [1])])
            return RatFunc(_fmpq(x))
        if isinstance(x, RatFunc):
            raise FieldMismatchError(f"rational function used in {self}")
        return _mpq(x)

    def v(self, raw):
        """Valuation of a raw value."""
        if self.kind == "LaurentQt":
            return raw.order()
        if not raw:
            return INF
        if self.kind == "TrivialQ":
            return 0
        num = int(raw.numerator)
        den = int(raw.denominator)
        vn = gmpy2.remove(num, self.p)[1] if num % self.p == 0 else 0
        vd = gmpy2.remove(den, self.p)[1] if den % self.p == 0 else 0
        return int(vn - vd)

    def __call__(self, x) -> "ValuedScalar":
        return ValuedScalar(self, self.coerce(x))

    def primitive_multiplier(self, vec):
        """Raw scalar ``c`` making ``c * vec`` integral with coprime entries (polynomials for LaurentQt)."""
        nz = [x for x in vec if x]
        if not nz:
            return self.one
        if self.kind == "LaurentQt":
            lcm = nz[0].den
            for x in nz[1:]:
                lcm = lcm * x.den // lcm.gcd(x.den)
            g = None
            for x in nz:
                p = x.num * (lcm // x.den)
                g = p if g is None else g.gcd(p)
            return RatFunc(lcm, g)
        lcm, g = gmpy2.mpz(1), gmpy2.mpz(0)
        for x in nz:
            lcm = gmpy2.lcm(lcm, x.denominator)
            g = gmpy2.gcd(g, x.numerator)
        return gmpy2.mpq(lcm, g)

    # -- JSON ------------------------------------------------------------------
    def raw_to_json(self, raw):
        if self.kind == "LaurentQt":
            num, den = raw.coefficients()
            return {"num": [_frac_str(c) for c in num], "den": [_frac_str(c) for c in den]}
        return _frac_str(to_fraction(raw))

    def raw_from_json(self, obj):
        return self.coerce(obj)


def _frac_str(f: Fraction) -> str:
    return str(f)


TrivialQ = ValuedField("TrivialQ")
LaurentQt = ValuedField("LaurentQt")


def PAdicQ(p: int) -> ValuedField:
    return ValuedField("PAdicQ", p)


class ValuedScalar:
    """An immutable element of a :class:`ValuedField`."""

    __slots__ = ("field", "raw")

    def __init__(self, field: ValuedField, raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raw", field.coerce(raw))

    def __setattr__(self, name, value):
        raise AttributeError("ValuedScalar is immutable")

    def _other(self, other):
        if isinstance(other, ValuedScalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other.raw
        return self.field.coerce(other)

    def __add__(self, other):
        return ValuedScalar(self.field, self.raw + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ValuedScalar(self.field, self.raw - self._other(other))

    def __rsub__(self, other):
        return ValuedScalar(self.field, self._other(other) - self.raw)

    def __mul__(self, other):
        return ValuedScalar(self.field, self.raw * self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if not o:
            raise ZeroDivisionError("division by zero")
        return ValuedScalar(self.field, self.raw / o)

    def __neg__(self):
        return ValuedScalar(self.field, -self.raw)

    def inv(self) -> "ValuedScalar":
        if not self.raw:
            raise ZeroDivisionError("zero has no inverse")
        return ValuedScalar(self.field, self.field.one / self.raw)

    def __bool__(self):
        return bool(self.raw)

    def __eq__(self, other):
        if isinstance(other, ValuedScalar):
            return self.field == other.field and self.raw == other.raw
        try:
            return self.raw == self.field.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def valuation(self):
        return self.field.v(self.raw)

    def to_json(self):
        return self.field.raw_to_json(self.raw)

    def __repr__(self):
        return f"{self.field}({self.raw})"


def valuation(x: ValuedScalar):
    """Additive valuation of ``x``; ``math.inf`` for zero."""
    return x.valuation()


def arith(op: str, x: ValuedScalar, y: ValuedScalar | None = None) -> ValuedScalar:
    """Field arithmetic by name: ``add``, ``mul``, ``inv`` or ``neg``."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inv()
    if op == "neg":
        return -x
    raise ValueError(f"unknown operation {op!r}")

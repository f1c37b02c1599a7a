"""Exact scalars: a base field (rationals or a prime field) and its
quadratic extension by a formal square root delta of n = dim H.

Rational values are kept as ``int`` whenever the denominator is 1 and as
``fractions.Fraction`` otherwise; Python mixes the two exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class ScalarError(ArithmeticError):
    pass


class NonInvertibleError(ScalarError):
    pass


class DeltaComponentError(ScalarError):
    """Raised when a value expected to be delta-free has a delta part."""


# ---------------------------------------------------------------------------
# prime field elements


class ModP:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ScalarError("mixing residues mod %d and mod %d" % (self.p, other.p))
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise NonInvertibleError("denominator divisible by %d" % self.p)
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise NonInvertibleError("0 is not invertible mod %d" % self.p)
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        return ModP(self._coerce(other), self.p) * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.value - o) % self.p == 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "ModP(%d, %d)" % (self.value, self.p)

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# base rings


class Rationals:
    name = "Q"
    characteristic = 0

    def __call__(self, x) -> Union[int, Fraction]:
        if isinstance(x, str):
            x = Fraction(x)
        elif isinstance(x, ModP):
            raise ScalarError("cannot coerce a residue into Q")
        else:
            x = Fraction(x)
        return x.numerator if x.denominator == 1 else x

    def inv(self, x):
        if x == 0:
            raise NonInvertibleError("0 is not invertible")
        return self(Fraction(1) / Fraction(x))

    def fmt(self, x) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("%r is not prime" % (p,))
        self.p = p
        self.characteristic = p
        self.name = "F%d" % p

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ScalarError("residue mod %d in F%d" % (x.p, self.p))
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise NonInvertibleError("denominator divisible by %d" % self.p)
            return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return ModP(int(x), self.p)

    def inv(self, x):
        return self(x).inverse()

    def fmt(self, x) -> str:
        return str(self(x).value)

    def to_json(self):
        return {"Fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


QQ = Rationals()


def ring_from_json(spec) -> Union[Rationals, PrimeField]:
    if spec in (None, "Q", "QQ"):
        return QQ
    if isinstance(spec, dict) and "Fp" in spec:
        return PrimeField(int(spec["Fp"]))
    raise ValueError("unknown base ring %r" % (spec,))


def ring_of(x):
    """Best-effort recovery of the base ring of a scalar."""
    if isinstance(x, ModP):
        return PrimeField(x.p)
    if isinstance(x, DeltaScalar):
        return ring_of(x.a) if isinstance(x.a, ModP) else ring_of(x.b)
    return QQ


# ---------------------------------------------------------------------------
# the quadratic extension


def _is_base(x) -> bool:
    return isinstance(x, (int, Fraction, ModP))


@dataclass(frozen=True)
class DeltaScalar:
    """The element ``a + b*delta`` with ``delta**2 == n``."""

    a: object
    b: object
    n: int

    def _parts(self, other):
        if isinstance(other, DeltaScalar):
            if other.n != self.n:
                raise ScalarError("delta^2 = %d vs delta^2 = %d" % (self.n, other.n))
            return other.a, other.b
        if _is_base(other):
            return other, 0
        return None

    def __add__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return DeltaScalar(self.a + o[0], self.b + o[1], self.n)

    __radd__ = __add__

    def __neg__(self):
        return DeltaScalar(-self.a, -self.b, self.n)

    def __sub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return DeltaScalar(self.a - o[0], self.b - o[1], self.n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        c, d = o
        return DeltaScalar(self.a * c + self.n * self.b * d, self.a * d + self.b * c, self.n)

    __rmul__ = __mul__

    def inverse(self) -> "DeltaScalar":
        # (a + b d)^-1 = (a - b d) / (a^2 - n b^2)
        norm = self.a * self.a - self.n * self.b * self.b
        if norm == 0:
            raise NonInvertibleError("%r is not invertible" % (self,))
        inv = _base_inverse(norm)
        return DeltaScalar(self.a * inv, -self.b * inv, self.n)

    def __truediv__(self, other):
        if _is_base(other):
            inv = _base_inverse(other)
            return DeltaScalar(self.a * inv, self.b * inv, self.n)
        if isinstance(other, DeltaScalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        o = self._parts(other) if isinstance(other, DeltaScalar) or _is_base(other) else None
        if o is None:
            return False
        return self.a == o[0] and self.b == o[1]

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.n))

    def __bool__(self):
        return bool(self.a != 0 or self.b != 0)

    def is_base(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return "DeltaScalar(%s, %s, n=%d)" % (self.a, self.b, self.n)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "%s*d" % (self.b,)
        return "%s + %s*d" % (self.a, self.b)

    def to_json(self, ring=None) -> dict:
        ring = ring or ring_of(self)
        return {"a": ring.fmt(self.a), "b": ring.fmt(self.b), "n": self.n}

    @classmethod
    def from_json(cls, obj, ring=QQ) -> "DeltaScalar":
        return cls(ring(obj["a"]), ring(obj["b"]), int(obj["n"]))


def _base_inverse(x):
    if isinstance(x, ModP):
        return x.inverse()
    if x == 0:
        raise NonInvertibleError("0 is not invertible")
    return QQ(Fraction(1) / Fraction(x))


def delta_pow(k: int, n: int, ring=QQ) -> DeltaScalar:
    """delta**k reduced to ``a + b*delta``; negative k needs n invertible."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nn = ring(n)
    if k < 0:
        if nn == 0:
            raise NonInvertibleError("delta is not invertible: n = %d is zero in %s" % (n, ring.name))
        base = ring.inv(nn)
        m = -k
    else:
        base = nn
        m = k
    zero, one = ring(0), ring(1)
    half = base ** (m // 2) if not isinstance(base, ModP) else ModP(pow(base.value, m // 2, base.p), base.p)
    if m % 2 == 0:
        return DeltaScalar(half * one, zero, n)
    if k >= 0:
        return DeltaScalar(zero, half * one, n)
    # delta^-(2j+1) = n^-(j+1) * delta
    return DeltaScalar(zero, half * base, n)


def project_to_base(x):
    """Return ``a`` for ``x = a + 0*delta``; base scalars pass through."""
    if _is_base(x):
        return x
    if x.b != 0:
        raise DeltaComponentError("unexpected delta component in %s" % (x,))
    return x.a


def lift(x, n: int) -> DeltaScalar:
    if isinstance(x, DeltaScalar):
        return x
    return DeltaScalar(x, 0 * x, n)

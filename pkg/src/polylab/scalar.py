"""Exact scalars: rationals, prime fields and quadratic extensions of prime fields.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field and
quadratic-extension elements are small immutable classes that support the
usual arithmetic operators, so geometric code is written once and runs over
any of the three field kinds.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from sympy import factorint, isprime, sqrt_mod

from .errors import NoRoot


class FpElem:
    """Residue class modulo a prime ``p``; ``value`` is always in ``0..p-1``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by 0 in F_{self.p}")
        return FpElem(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FpElem(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElem({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Fp2Elem:
    """Element ``a + b*s`` of ``F_p[s]/(s^2 - d)`` with ``d`` a non-residue."""

    __slots__ = ("a", "b", "p", "d")

    def __init__(self, a: int, b: int, p: int, d: int):
        self.a = a % p
        self.b = b % p
        self.p = p
        self.d = d

    def _coerce(self, other):
        if isinstance(other, Fp2Elem):
            if (other.p, other.d) != (self.p, self.d):
                raise ValueError("mixing elements of different fields")
            return other.a, other.b
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError("mixing elements of different characteristic")
            return other.value, 0
        if isinstance(other, int):
            return other, 0
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p), 0
        return NotImplemented

    def _new(self, a, b):
        return Fp2Elem(a, b, self.p, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.a + o[0], self.b + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.a - o[0], self.b - o[1])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o[0] - self.a, o[1] - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c, e = o
        return self._new(self.a * c + self.d * self.b * e, self.a * e + self.b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.a, -self.b)

    def __pos__(self):
        return self

    def inverse(self) -> "Fp2Elem":
        norm = (self.a * self.a - self.d * self.b * self.b) % self.p
        if norm == 0:
            raise ZeroDivisionError("0 has no inverse")
        ninv = pow(norm, -1, self.p)
        return self._new(self.a * ninv, -self.b * ninv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * self._new(*o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(*o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self._new(1, 0), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.a - o[0]) % self.p == 0 and (self.b - o[1]) % self.p == 0

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"Fp2Elem({self.a}, {self.b}, p={self.p}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*s"


_FP2_RE = re.compile(r"^\s*(-?\d+)\s*\+\s*(-?\d+)\s*\*\s*s\s*$")


@dataclass(frozen=True)
class Field:
    """A field descriptor.

    ``p == 0`` means the rationals.  ``nonresidue`` is set only for the
    quadratic extension ``F_{p^2} = F_p(sqrt(nonresidue))``.
    """

    p: int = 0
    nonresidue: int | None = None

    def __post_init__(self):
        if self.p:
            if not isprime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p <= 3:
                raise ValueError("characteristic 2 and 3 are not supported")
        if self.nonresidue is not None:
            if not self.p:
                raise ValueError("quadratic extensions are only built over F_p")
            if sqrt_mod(self.nonresidue % self.p, self.p) is not None:
                raise ValueError(f"{self.nonresidue} is a square mod {self.p}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def quadratic(cls, p: int) -> "Field":
        """``F_{p^2}`` presented with the smallest positive non-residue."""
        d = next(d for d in range(2, p) if sqrt_mod(d, p) is None)
        return cls(p, d)

    @property
    def kind(self) -> str:
        if not self.p:
            return "Q"
        return "Fp" if self.nonresidue is None else "Fp2"

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        if not self.p:
            raise ValueError("Q is infinite")
        return self.p if self.nonresidue is None else self.p * self.p

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "Q":
            if isinstance(value, (FpElem, Fp2Elem)):
                raise TypeError("cannot coerce a finite-field element into Q")
            return Fraction(value)
        if self.kind == "Fp":
            if isinstance(value, FpElem):
                if value.p != self.p:
                    raise ValueError("characteristic mismatch")
                return value
            if isinstance(value, Fraction):
                return FpElem(value.numerator, self.p) / value.denominator
            return FpElem(int(value), self.p)
        if isinstance(value, Fp2Elem):
            return value
        if isinstance(value, FpElem):
            return Fp2Elem(value.value, 0, self.p, self.nonresidue)
        if isinstance(value, tuple):
            return Fp2Elem(value[0], value[1], self.p, self.nonresidue)
        if isinstance(value, Fraction):
            return self(value.numerator) / value.denominator
        return Fp2Elem(int(value), 0, self.p, self.nonresidue)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def generator(self):
        """The adjoined square root ``s`` (only for ``F_{p^2}``)."""
        if self.kind != "Fp2":
            raise ValueError("only F_{p^2} has an adjoined generator")
        return Fp2Elem(0, 1, self.p, self.nonresidue)

    def elements(self) -> Iterator:
        if self.kind == "Q":
            raise ValueError("cannot enumerate Q")
        if self.kind == "Fp":
            for v in range(self.p):
                yield FpElem(v, self.p)
        else:
            for a in range(self.p):
                for b in range(self.p):
                    yield Fp2Elem(a, b, self.p, self.nonresidue)

    def random(self, rng: random.Random, height: int = 20):
        """Random element; over Q a fraction with numerator/denominator below ``height``."""
        if self.kind == "Q":
            return Fraction(rng.randint(-height, height), rng.randint(1, height))
        if self.kind == "Fp":
            return FpElem(rng.randrange(self.p), self.p)
        return Fp2Elem(rng.randrange(self.p), rng.randrange(self.p), self.p, self.nonresidue)

    def random_nonzero(self, rng: random.Random, height: int = 20):
        while True:
            x = self.random(rng, height)
            if x != 0:
                return x

    def contains(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, (int, Fraction))
        if self.kind == "Fp":
            return isinstance(x, FpElem) and x.p == self.p
        return isinstance(x, Fp2Elem) and x.p == self.p and x.d == self.nonresidue

    # -- serialization ----------------------------------------------------
    def format(self, x) -> str:
        if self.kind == "Q":
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(self(x))

    def parse(self, s: str):
        s = s.strip()
        if self.kind == "Fp2":
            m = _FP2_RE.match(s)
            if m:
                return Fp2Elem(int(m.group(1)), int(m.group(2)), self.p, self.nonresidue)
        if self.kind == "Q":
            return Fraction(s)
        value = Fraction(s)
        return self(value)

    def to_json(self) -> dict:
        if self.kind == "Q":
            return {"type": "Q"}
        if self.kind == "Fp":
            return {"type": "Fp", "p": self.p}
        return {"type": "Fp2", "p": self.p, "nonresidue": self.nonresidue}

    @classmethod
    def from_json(cls, data: dict) -> "Field":
        kind = data["type"]
        if kind == "Q":
            return cls(0)
        if kind == "Fp":
            return cls(int(data["p"]))
        if kind == "Fp2":
            return cls(int(data["p"]), int(data["nonresidue"]))
        raise ValueError(f"unknown field type {kind!r}")

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F_{self.p}"
        return f"F_{self.p}^2"


FieldSpec = Field


def field_of(x) -> Field:
    """Recover the field an element lives in."""
    if isinstance(x, FpElem):
        return Field(x.p)
    if isinstance(x, Fp2Elem):
        return Field(x.p, x.d)
    if isinstance(x, (int, Fraction)):
        return Field(0)
    raise TypeError(f"not a scalar: {x!r}")


def sort_key(x):
    """Total order on scalars of one field, used to sort unlabeled outputs."""
    if isinstance(x, FpElem):
        return (x.value,)
    if isinstance(x, Fp2Elem):
        return (x.a, x.b)
    return (Fraction(x),)


def _multiplicative_order_fp(x: int, p: int, factors: dict[int, int]) -> int:
    order = p - 1
    for q, e in factors.items():
        for _ in range(e):
            if pow(x, order // q, p) == 1:
                order //= q
            else:
                break
    return order


def primitive_nth_root(field: Field, n: int):
    """An element of multiplicative order exactly ``n``.

    The search is deterministic: the smallest residue of order ``n`` is
    returned.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if field.kind == "Q":
        if n == 1:
            return Fraction(1)
        if n == 2:
            return Fraction(-1)
        raise NoRoot(f"Q has no primitive {n}-th root of unity")
    if field.kind == "Fp2":
        raise NoRoot("roots of unity are only searched in prime fields")
    p = field.p
    if (p - 1) % n:
        raise NoRoot(f"{n} does not divide {p - 1}")
    factors = factorint(p - 1)
    for g in range(1, p):
        if _multiplicative_order_fp(g, p, factors) == n:
            return FpElem(g, p)
    raise NoRoot(f"no element of order {n} in F_{p}")  # pragma: no cover


def multiplicative_order(x) -> int:
    """Multiplicative order of a nonzero prime-field element."""
    if not isinstance(x, FpElem):
        raise TypeError("multiplicative_order expects a prime-field element")
    if x.value == 0:
        raise ValueError("0 has no multiplicative order")
    return _multiplicative_order_fp(x.value, x.p, factorint(x.p - 1))


def sqrt_in_field(field: Field, a):
    """A square root of ``a`` (the smaller residue for prime fields)."""
    a = field(a)
    if field.kind == "Q":
        num, den = a.numerator, a.denominator
        if num < 0:
            raise NoRoot(f"{a} is negative")
        rn, rd = _isqrt_exact(num), _isqrt_exact(den)
        if rn is None or rd is None:
            raise NoRoot(f"{a} is not a rational square")
        return Fraction(rn, rd)
    if field.kind == "Fp2":
        raise NoRoot("square roots are only computed in Q and prime fields")
    r = sqrt_mod(a.value, field.p)
    if r is None:
        raise NoRoot(f"{a.value} is a non-residue mod {field.p}")
    return FpElem(min(r, field.p - r), field.p)


def _isqrt_exact(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None

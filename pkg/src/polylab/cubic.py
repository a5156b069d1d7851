"""Plane cubics: interpolation, the chord-tangent group law and torsion sources.

Smooth curves are always produced in Weierstrass or Tate normal form, so the
point ``(0:1:0)`` is a flex and can serve as the neutral element without
any Hessian computation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import gcd, isqrt

from sympy import divisors, factorint

from .arrangement import Arrangement
from .errors import (Degenerate, DegenerateInput, DomainError, InvalidProgression, NoCubic,
                     NotFound, SingularPoint)
from .linalg import cross, dot, nullspace, rref
from .projective import ProjPoint
from .scalar import Field, FpElem, field_of

# x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3
MONOMIALS = ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
             (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))
MONOMIAL_NAMES = ("x^3", "x^2y", "x^2z", "xy^2", "xyz", "xz^2", "y^3", "y^2z", "yz^2", "z^3")


def monomial_values(v):
    x, y, z = v
    x2, y2, z2 = x * x, y * y, z * z
    return (x2 * x, x2 * y, x2 * z, x * y2, x * y * z, x * z2, y2 * y, y2 * z, y * z2, z2 * z)


class PlaneCubic:
    """A cubic form given by its 10 coefficients, normalized up to scale."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != 10:
            raise ValueError("a plane cubic has 10 coefficients")
        lead = next((c for c in coeffs if c != 0), None)
        if lead is None:
            raise DegenerateInput("the zero form is not a cubic")
        inv = 1 / lead
        self.coeffs = tuple(c * inv for c in coeffs)

    def __eq__(self, other):
        return isinstance(other, PlaneCubic) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"{c}*{m}" for c, m in zip(self.coeffs, MONOMIAL_NAMES) if c != 0]
        return "PlaneCubic(" + " + ".join(terms) + ")"

    @property
    def field(self) -> Field:
        return field_of(self.coeffs[0])

    def evaluate_raw(self, v):
        return sum((c * m for c, m in zip(self.coeffs, monomial_values(v)) if c != 0), self.coeffs[0] * 0)

    def evaluate(self, p: ProjPoint):
        return self.evaluate_raw(p.coords)

    def contains(self, p: ProjPoint) -> bool:
        return self.evaluate_raw(p.coords) == 0

    def gradient_raw(self, v):
        x, y, z = v
        c = self.coeffs
        xx, xy, xz, yy, yz, zz = x * x, x * y, x * z, y * y, y * z, z * z
        gx = 3 * c[0] * xx + 2 * c[1] * xy + 2 * c[2] * xz + c[3] * yy + c[4] * yz + c[5] * zz
        gy = c[1] * xx + 2 * c[3] * xy + c[4] * xz + 3 * c[6] * yy + 2 * c[7] * yz + c[8] * zz
        gz = c[2] * xx + c[4] * xy + 2 * c[5] * xz + c[7] * yy + 2 * c[8] * yz + 3 * c[9] * zz
        return (gx, gy, gz)

    def gradient(self, p: ProjPoint):
        return self.gradient_raw(p.coords)

    def is_singular_at(self, p: ProjPoint) -> bool:
        return all(g == 0 for g in self.gradient(p))

    def to_json(self) -> dict:
        f = self.field
        return {"field": f.to_json(), "coeffs": [f.format(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "PlaneCubic":
        f = Field.from_json(data["field"])
        return cls(f.parse(s) for s in data["coeffs"])


def weierstrass_cubic(a1, a2, a3, a4, a6) -> PlaneCubic:
    """``y^2z + a1 xyz + a3 yz^2 = x^3 + a2 x^2z + a4 xz^2 + a6 z^3``."""
    zero = a1 * 0
    one = zero + 1
    return PlaneCubic((-one, zero, -a2, zero, a1, -a4, zero, one, a3, -a6))


def weierstrass_discriminant(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


@dataclass
class CubicFit:
    """Result of interpolating a cubic: ``cubic`` when unique, ``pencil`` otherwise."""

    rank: int
    cubic: PlaneCubic | None
    pencil: list

    @property
    def unique(self) -> bool:
        return self.cubic is not None


def fit_cubic(points) -> CubicFit:
    """Cubics through ``points`` via the null space of the evaluation matrix."""
    points = list(points)
    if not points:
        raise ValueError("need at least one point")
    rows = [monomial_values(p.coords) for p in points]
    one = points[0].coords[0] * 0 + 1
    reduced, pivots = rref(rows, 10)
    rk = len(pivots)
    if rk == 10:
        raise NoCubic(f"no cubic passes through these {len(points)} points")
    basis = nullspace(rows, 10, one)
    if rk == 9:
        return CubicFit(rk, PlaneCubic(basis[0]), [])
    return CubicFit(rk, None, [PlaneCubic(v) for v in basis])


def _tangent_direction(grad, p: ProjPoint):
    for i in range(3):
        if p.coords[i] != 0:
            e = [0, 0, 0]
            e[i] = 1
            d = cross(grad, e)
            if any(c != 0 for c in d):
                return d
    raise DegenerateInput("no tangent direction")  # pragma: no cover


def third_intersection(curve: PlaneCubic, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """The residual point of the secant ``pq`` (tangent at ``p`` when ``p == q``)."""
    gp = curve.gradient(p)
    if all(g == 0 for g in gp):
        raise SingularPoint(f"{p} is singular on the curve")
    pc = p.coords
    if p == q:
        d = _tangent_direction(gp, p)
        c = dot(curve.gradient_raw(d), pc)
        e = curve.evaluate_raw(d)
        s, u = e, -c
    else:
        if all(g == 0 for g in curve.gradient(q)):
            raise SingularPoint(f"{q} is singular on the curve")
        d = q.coords
        b = dot(gp, d)
        c = dot(curve.gradient_raw(d), pc)
        s, u = c, -b
    if s == 0 and u == 0:
        raise DegenerateInput("the line is a component of the curve")
    r = ProjPoint(tuple(s * a + u * b for a, b in zip(pc, d)))
    if curve.is_singular_at(r):
        raise SingularPoint(f"the line through {p} and {q} passes through the singular point {r}")
    return r


class CubicGroup:
    """Chord-tangent group on a cubic whose origin is a flex."""

    def __init__(self, curve: PlaneCubic, origin: ProjPoint, check: bool = True):
        self.curve = curve
        self.origin = origin
        if check:
            if not curve.contains(origin):
                raise DomainError("the origin is not on the curve")
            if third_intersection(curve, origin, origin) != origin:
                raise DomainError("the origin is not a flex")

    @property
    def field(self) -> Field:
        return self.curve.field

    def contains(self, p) -> bool:
        return self.curve.contains(p)

    def neg(self, p: ProjPoint) -> ProjPoint:
        return third_intersection(self.curve, self.origin, p)

    def add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        if p == self.origin:
            return q
        if q == self.origin:
            return p
        return third_intersection(self.curve, self.origin, third_intersection(self.curve, p, q))

    def sub(self, p, q):
        return self.add(p, self.neg(q))

    def scalar_mul(self, k: int, p: ProjPoint) -> ProjPoint:
        if k < 0:
            return self.scalar_mul(-k, self.neg(p))
        result, base = self.origin, p
        while k:
            if k & 1:
                result = self.add(result, base)
            k >>= 1
            if k:
                base = self.add(base, base)
        return result

    def multiples(self, p: ProjPoint, n: int) -> list:
        """``[0p, 1p, ..., (n-1)p]``."""
        out = [self.origin]
        for _ in range(n - 1):
            out.append(self.add(out[-1], p))
        return out

    def order_divides(self, p, n: int) -> bool:
        return self.scalar_mul(n, p) == self.origin

    def has_exact_order(self, p, n: int) -> bool:
        if not self.order_divides(p, n):
            return False
        return all(not self.order_divides(p, d) for d in divisors(n) if d < n)

    def to_json(self) -> dict:
        f = self.field
        return {"curve": self.curve.to_json(), "origin": [f.format(c) for c in self.origin.coords]}


@dataclass
class TorsionDatum:
    """A cubic group with a point ``t`` of exact order ``n``."""

    group: CubicGroup
    t: ProjPoint
    n: int
    weierstrass: "WeierstrassCurve | None" = None
    ainvs: tuple | None = None

    @property
    def field(self) -> Field:
        return self.group.field

    def subgroup(self) -> list:
        return self.group.multiples(self.t, self.n)

    def random_point(self, rng: random.Random) -> ProjPoint:
        if self.weierstrass is not None:
            return self.weierstrass.random_point(rng)
        if self.ainvs is not None:
            pts = rational_points(self.ainvs, 12)
            if pts:
                return pts[rng.randrange(len(pts))]
        raise NotFound("no way to sample points on this curve")

    def to_json(self) -> dict:
        f = self.field
        out = self.group.to_json()
        out.update({"generator": [f.format(c) for c in self.t.coords], "n": self.n})
        return out


# -- short Weierstrass curves over F_p with fast integer arithmetic ----------

class WeierstrassCurve:
    """``y^2 = x^3 + a x + b`` over ``F_p``; affine points are int pairs, ``None`` is O."""

    def __init__(self, a: int, b: int, p: int):
        if (4 * a ** 3 + 27 * b * b) % p == 0:
            raise Degenerate("singular Weierstrass curve")
        self.a, self.b, self.p = a % p, b % p, p
        self._order = None
        self._points = None

    def __repr__(self):
        return f"WeierstrassCurve(a={self.a}, b={self.b}, p={self.p})"

    @property
    def field(self) -> Field:
        return Field(self.p)

    def rhs(self, x):
        return (x * x * x + self.a * x + self.b) % self.p

    def order(self) -> int:
        if self._order is None:
            p, half = self.p, (self.p - 1) // 2
            total = 1
            for x in range(p):
                r = self.rhs(x)
                total += 1 if r == 0 else (2 if pow(r, half, p) == 1 else 0)
            self._order = total
        return self._order

    def points(self) -> list:
        """All affine points (the point at infinity excluded)."""
        if self._points is None:
            p = self.p
            roots = {}
            for y in range(p):
                roots.setdefault(y * y % p, []).append(y)
            self._points = [(x, y) for x in range(p) for y in roots.get(self.rhs(x), ())]
        return self._points

    def random_point(self, rng: random.Random) -> ProjPoint:
        x, y = rng.choice(self.points())
        return self.to_proj((x, y))

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.p
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return None
            lam = (3 * x1 * x1 + self.a) * pow(2 * y1, -1, p) % p
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (lam * lam - x1 - x2) % p
        return (x3, (lam * (x1 - x3) - y1) % p)

    def mul(self, k: int, P):
        if k < 0:
            k, P = -k, self.neg(P)
        result = None
        while k:
            if k & 1:
                result = self.add(result, P)
            P = self.add(P, P)
            k >>= 1
        return result

    def neg(self, P):
        return None if P is None else (P[0], (-P[1]) % self.p)

    def point_order(self, P) -> int:
        order = self.order()
        for q, e in factorint(order).items():
            for _ in range(e):
                if self.mul(order // q, P) is None:
                    order //= q
                else:
                    break
        return order

    def plane_cubic(self) -> PlaneCubic:
        f = self.field
        return weierstrass_cubic(f(0), f(0), f(0), f(self.a), f(self.b))

    def group(self) -> CubicGroup:
        f = self.field
        return CubicGroup(self.plane_cubic(), ProjPoint(f(0), f(1), f(0)), check=False)

    def to_proj(self, P) -> ProjPoint:
        f = self.field
        if P is None:
            return ProjPoint(f(0), f(1), f(0))
        return ProjPoint(f(P[0]), f(P[1]), f(1))

    def from_proj(self, P: ProjPoint):
        x, y, z = P.coords
        if z == 0:
            return None
        return (int(x / z), int(y / z))

    def torsion_points(self, n: int) -> list:
        """Affine points ``P`` with ``nP = O`` (together with ``None``)."""
        return [None] + [P for P in self.points() if self.mul(n, P) is None]

    def point_of_order(self, n: int, rng: random.Random | None = None):
        """A point of exact order ``n`` or ``None``."""
        if n == 1:
            return None
        if self.order() % n:
            return False
        pts = list(self.points())
        if rng is not None:
            rng.shuffle(pts)
        for P in pts:
            o = self.point_order(P)
            if o % n == 0:
                return self.mul(o // n, P)
        return False


def iter_weierstrass(p: int, rng: random.Random | None = None, budget: int = 4000):
    """Nonsingular short Weierstrass curves over ``F_p``; random order when ``rng`` is given."""
    seen = 0
    if rng is None:
        pairs = ((a, b) for a in range(p) for b in range(p))
    else:
        pairs = ((rng.randrange(p), rng.randrange(p)) for _ in count())
    for a, b in pairs:
        if seen >= budget:
            return
        if (4 * a ** 3 + 27 * b * b) % p == 0:
            continue
        seen += 1
        yield WeierstrassCurve(a, b, p)


def find_torsion_point(field: Field, n: int, rng: random.Random | None = None,
                       budget: int = 4000) -> TorsionDatum:
    """Search short Weierstrass curves over ``field`` for a point of exact order ``n``."""
    if field.kind != "Fp":
        raise ValueError("torsion search runs over prime fields")
    p = field.p
    if n == 1:
        curve = next(iter_weierstrass(p, rng, budget))
        o = curve.to_proj(None)
        return TorsionDatum(curve.group(), o, 1, curve)
    if n > p + 1 + 2 * int(p ** 0.5) + 2:
        raise NotFound(f"no curve over F_{p} has a point of order {n} (Hasse bound)")
    for curve in iter_weierstrass(p, rng, budget):
        t = curve.point_of_order(n, rng)
        if t:
            return TorsionDatum(curve.group(), curve.to_proj(t), n, curve)
    raise NotFound(f"no point of order {n} found over F_{p} within {budget} curves")


# -- Tate normal form over Q --------------------------------------------------

def tate_parameters(n: int, t):
    """``(b, c)`` of the Tate normal form with ``(0,0)`` of order ``n``."""
    if n == 5:
        return t, t
    if n == 6:
        return t + t * t, t
    if n == 7:
        return t ** 3 - t ** 2, t ** 2 - t
    if n == 8:
        return (2 * t - 1) * (t - 1), (2 * t - 1) * (t - 1) / t
    if n == 9:
        c = t * t * (t - 1)
        return c * (t * t - t + 1), c
    if n == 10:
        den = t * t - 3 * t + 1
        return t ** 3 * (t - 1) * (2 * t - 1) / den ** 2, -t * (t - 1) * (2 * t - 1) / den
    if n == 12:
        return (t * (2 * t - 1) * (2 * t * t - 2 * t + 1) * (3 * t * t - 3 * t + 1) / (t - 1) ** 4,
                -t * (2 * t - 1) * (3 * t * t - 3 * t + 1) / (t - 1) ** 3)
    raise ValueError(f"no Tate normal form table for n={n}")


def tate_curve(n: int, param, field: Field | None = None) -> TorsionDatum:
    """``y^2 + (1-c)xy - by = x^3 - bx^2`` with ``(0:0:1)`` of exact order ``n``."""
    field = field or Field.rationals()
    t = field(param)
    try:
        b, c = tate_parameters(n, t)
    except ZeroDivisionError:
        raise Degenerate(f"parameter {param} is a pole of the n={n} table") from None
    a1, a2, a3, a4, a6 = 1 - c, -b, -b, field(0), field(0)
    if weierstrass_discriminant(a1, a2, a3, a4, a6) == 0:
        raise Degenerate(f"parameter {param} gives a singular curve")
    group = CubicGroup(weierstrass_cubic(a1, a2, a3, a4, a6), ProjPoint(field(0), field(1), field(0)))
    tp = ProjPoint(field(0), field(0), field(1))
    if not group.has_exact_order(tp, n):
        raise Degenerate(f"(0,0) does not have exact order {n} for parameter {param}")
    return TorsionDatum(group, tp, n, ainvs=(a1, a2, a3, a4, a6))


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def rational_points(ainvs, height: int) -> list:
    """Affine rational points with ``x = a/d``, ``|a|, d <= height`` on a long Weierstrass curve."""
    a1, a2, a3, a4, a6 = (Fraction(c) for c in ainvs)
    out = []
    seen = set()
    for d in range(1, height + 1):
        for a in range(-height, height + 1):
            if gcd(a, d) != 1:
                continue
            x = Fraction(a, d)
            if x in seen:
                continue
            seen.add(x)
            b = a1 * x + a3
            rhs = x ** 3 + a2 * x * x + a4 * x + a6
            root = _rational_sqrt(b * b + 4 * rhs)
            if root is None:
                continue
            for y in {(-b + root) / 2, (-b - root) / 2}:
                out.append(ProjPoint(x, y, Fraction(1)))
    return out


def find_rational_base_point(datum: TorsionDatum, height: int = 30):
    """A small-height rational point ``p`` with ``6p`` outside ``<t>`` (so of infinite order)."""
    if datum.ainvs is None:
        raise ValueError("needs a datum with Weierstrass coefficients")
    for p in rational_points(datum.ainvs, height):
        if valid_progression(datum, p):
            return p
    raise NotFound(f"no rational base point of height <= {height}")


# -- singular cubics ----------------------------------------------------------

def nodal_cubic(field: Field) -> PlaneCubic:
    """``y^2 z = x^3 + x^2 z``, singular at ``(0:0:1)``."""
    o, z = field(1), field(0)
    return PlaneCubic((-o, z, -o, z, z, z, z, o, z, z))


def nodal_gamma(t) -> ProjPoint:
    """The isomorphism from the multiplicative group onto the smooth nodal locus."""
    if t == 0:
        raise DomainError("t = 0 is not in the multiplicative group")
    return ProjPoint(4 * t * t - 4 * t, 4 * t * t + 4 * t, (t - 1) ** 3)


def nodal_inverse(P: ProjPoint):
    x, y, z = P.coords
    curve = nodal_cubic(field_of(x))
    if not curve.contains(P):
        raise DomainError(f"{P} is not on the nodal cubic")
    if x == 0 and y == 0:
        raise DomainError("the node has no parameter")
    if y == 0:
        # the only smooth point with y = 0 is (1:0:-1) = gamma(-1)
        return -(x / x)
    return (2 * x * x + 2 * x * y + y * y + 2 * x * z + 2 * y * z) / (y * y)


def cuspidal_cubic(field: Field) -> PlaneCubic:
    """``y^2 z = x^3``, with cusp ``(0:0:1)`` and flex ``(0:1:0)``."""
    o, z = field(1), field(0)
    return PlaneCubic((-o, z, z, z, z, z, z, o, z, z))


def cuspidal_point(a) -> ProjPoint:
    """``a -> (a : 1 : a^3)``; three such points are collinear iff their parameters sum to 0."""
    return ProjPoint(a, a * 0 + 1, a ** 3)


def cuspidal_parameter(P: ProjPoint):
    x, y, z = P.coords
    if y == 0:
        raise DomainError("the cusp has no parameter")
    return x / y


def cuspidal_progression(field: Field, p0, step) -> Arrangement:
    """The ``l`` points with parameters ``p0 + k*step`` on the cuspidal cubic in characteristic ``l``.

    ``p0`` must lie outside the subgroup ``step * F_l``; over the prime field
    itself that subgroup is everything, so ``p0`` has to come from ``F_{l^2}``.
    """
    ell = field.characteristic
    if ell < 7:
        raise ValueError("cuspidal progressions need characteristic >= 7")
    p0, step = field(p0), field(step)
    if step == 0:
        raise ValueError("step must be nonzero")
    ratio = p0 / step
    if any(ratio == k for k in range(ell)):
        raise InvalidProgression("p0 lies in the torsion subgroup generated by step")
    pts = tuple(cuspidal_point(p0 + k * step) for k in range(ell))
    return Arrangement.of_points(pts, field)


def weierstrass_from_plane(curve: PlaneCubic):
    """Recognize ``y^2 z = x^3 + a x z^2 + b z^3`` and return ``(a, b)`` or ``None``."""
    c = curve.coeffs
    x3 = c[0]
    norm = [v / -x3 for v in c] if x3 != 0 else None
    if norm is None:
        return None
    if any(norm[i] != 0 for i in (1, 2, 3, 4, 6, 8)) or norm[7] != 1:
        return None
    return -norm[5], -norm[9]


def is_prime_field_element(x) -> bool:
    return isinstance(x, FpElem)


def rational(x) -> Fraction:
    return Fraction(x)


def valid_progression(datum: TorsionDatum, p: ProjPoint) -> bool:
    """``t`` has exact order ``n`` and ``6p`` is not a multiple of ``t``."""
    g = datum.group
    if not g.contains(p) or not g.has_exact_order(datum.t, datum.n):
        return False
    six_p = g.scalar_mul(6, p)
    return six_p not in set(datum.subgroup())

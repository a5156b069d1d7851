"""From torsion on cubics to realizations of M_n, and back through Lambda.

A torsion progression ``T_p = (p + k t)`` dualizes to ``n`` lines; together
with the duals of ``T_{-2p}`` (labeled so that primed label ``r`` carries
``-2p + r t``) they realize ``M_n``, because three points of a cubic with
flex origin are collinear exactly when they sum to zero.
"""
from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache
from dataclasses import dataclass

from .arrangement import LINES, POINTS, Arrangement, rich_lines, points_of_multiplicity
from .cubic import TorsionDatum, cuspidal_point, nodal_gamma, valid_progression
from .errors import DegenerateInput, DomainError, InvalidProgression, NotCollinear, PolylabError
from .projective import ProjPoint, join, projectively_equivalent
from .scalar import Field, primitive_nth_root


@dataclass
class TorsionProgression:
    datum: TorsionDatum
    p: ProjPoint
    points: tuple

    @property
    def n(self) -> int:
        return self.datum.n

    def arrangement(self) -> Arrangement:
        return Arrangement.of_points(self.points, self.datum.field)

    def shifted(self, k: int) -> "TorsionProgression":
        return torsion_progression(self.datum, self.points[k % self.n])


def torsion_progression(datum: TorsionDatum, p: ProjPoint) -> TorsionProgression:
    if not datum.group.contains(p):
        raise DomainError(f"{p} is not on the curve")
    if not valid_progression(datum, p):
        raise InvalidProgression("6p lies in the subgroup generated by t")
    g = datum.group
    pts = [p]
    for _ in range(datum.n - 1):
        pts.append(g.add(pts[-1], datum.t))
    return TorsionProgression(datum, p, tuple(pts))


def random_valid_point(datum: TorsionDatum, rng: random.Random, tries: int = 200) -> ProjPoint:
    """A random curve point ``p`` with ``6p`` outside ``<t>``."""
    for _ in range(tries):
        p = datum.random_point(rng)
        if valid_progression(datum, p):
            return p
    raise InvalidProgression("no valid base point found; the curve group is too small")


def realization_datum(field: Field, n: int, rng: random.Random, budget: int = 4000) -> TorsionDatum:
    """A torsion datum over ``F_p`` that also admits a valid base point."""
    from .cubic import iter_weierstrass
    from .errors import NotFound
    for curve in iter_weierstrass(field.p, rng, budget):
        if curve.order() % n or curve.order() == n:
            continue
        t = curve.point_of_order(n, rng)
        if not t:
            continue
        datum = TorsionDatum(curve.group(), curve.to_proj(t), n, curve)
        try:
            random_valid_point(datum, rng, tries=30)
        except InvalidProgression:
            continue
        return datum
    raise NotFound(f"no curve over F_{field.p} with a valid order-{n} progression")


def _vertex(lines, i, j):
    return ProjPoint(_cross(lines[i].coords, lines[j].coords))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def labeled_lambda(C0: Arrangement, n: int | None = None) -> Arrangement:
    """Primed label ``r`` gets the line through all vertices ``p_{i,j}`` with ``i + j + r = 0``."""
    if C0.kind != LINES:
        raise ValueError("labeled_lambda acts on line arrangements")
    n = len(C0) if n is None else n
    if len(C0) != n:
        raise ValueError(f"expected {n} lines, got {len(C0)}")
    lines = C0.members
    out = []
    for r in range(n):
        pts = {_vertex(lines, i, j) for i in range(n) for j in range(i + 1, n) if (i + j + r) % n == 0}
        pts = list(pts)
        if len(pts) < 2:
            raise DegenerateInput(f"the vertices for label {r} coincide")
        l = join(pts[0], pts[1])
        if not all(l.contains(q) for q in pts[2:]):
            raise NotCollinear(r)
        out.append(l)
    if len(set(out)) != n:
        raise DegenerateInput("labeled_lambda produced repeated lines")
    return Arrangement.of_lines(out, C0.field)


def lambda_deletion_rule(C0: Arrangement, c: int) -> Arrangement:
    """Odd ``n``: the double-point rich lines of ``C0`` minus the line labeled ``-c/2``."""
    n = len(C0)
    if n % 2 == 0:
        raise ValueError("the deletion rule needs odd n")
    half = (-c * pow(2, -1, n)) % n
    rest = Arrangement.of_lines([l for i, l in enumerate(C0.members) if i != half], C0.field)
    k = (n - 1) // 2
    return rich_lines(points_of_multiplicity(rest, {2}), {k})


def gamma_map(datum: TorsionDatum, p: ProjPoint) -> Arrangement:
    """``D(T_p)`` followed by ``D(T_{-2p})`` in the M_n labeling."""
    tp = torsion_progression(datum, p)
    g = datum.group
    q = g.scalar_mul(-2, p)
    pts2 = [q]
    for _ in range(datum.n - 1):
        pts2.append(g.add(pts2[-1], datum.t))
    lines = [x.dual() for x in tp.points] + [x.dual() for x in pts2]
    return Arrangement.of_lines(lines, datum.field)


def gamma_via_lambda(datum: TorsionDatum, p: ProjPoint) -> Arrangement:
    """Same as :func:`gamma_map` but the primed block is computed by ``labeled_lambda``."""
    tp = torsion_progression(datum, p)
    c0 = tp.arrangement().dual()
    return c0.union(labeled_lambda(c0))


def multiply_by_minus2_via_psi(P, n: int | None = None) -> Arrangement:
    """Incidence-only image of a labeled progression: label ``k`` receives ``-2p + k t``."""
    if isinstance(P, TorsionProgression):
        P = P.arrangement()
    if P.kind != POINTS:
        raise ValueError("expected a point arrangement")
    return labeled_lambda(P.dual(), n).dual()


def fiber_equivalence_check(datum: TorsionDatum, p: ProjPoint, t3: ProjPoint) -> bool:
    """Whether ``Gamma(E,t,p)`` and ``Gamma(E,t,p+t3)`` are projectively equivalent."""
    g = datum.group
    if g.scalar_mul(3, t3) != g.origin:
        raise DomainError("t3 is not a 3-torsion point")
    a = gamma_map(datum, p)
    b = gamma_map(datum, g.add(p, t3))
    return projectively_equivalent(a.members, b.members) is not None


def gamma_equivalent(datum: TorsionDatum, p: ProjPoint, q: ProjPoint) -> bool:
    a, b = gamma_map(datum, p), gamma_map(datum, q)
    return projectively_equivalent(a.members, b.members) is not None


def nodal_guard(t, n: int) -> bool:
    """``t^{6n} != 1`` (and ``t != 0``): the nodal analogue of ``6p`` outside the torsion."""
    return t != 0 and t ** (6 * n) != 1


def nodal_prime(n: int, start: int = 5) -> int:
    """Smallest prime ``p >= start`` with ``n | p-1`` whose unit group has room for the guard."""
    from sympy import isprime
    p = start
    while not (isprime(p) and p > 3 and (p - 1) % n == 0 and (6 * n) % (p - 1) != 0):
        p += 1
    return p


def nodal_parameter(n: int, field: Field, rng: random.Random | None = None):
    """A parameter passing :func:`nodal_guard` (random when ``rng`` is given)."""
    elems = [x for x in field.elements() if nodal_guard(x, n)]
    if not elems:
        raise InvalidProgression(f"every t in F_{field.p} has t^(6n) = 1 for n={n}")
    return elems[rng.randrange(len(elems))] if rng is not None else elems[0]


def realize_from_nodal(n: int, t, field: Field) -> Arrangement:
    """``D(gamma(t zeta^k))`` for ``k = 0..n-1`` followed by its labeled Lambda image."""
    t = field(t)
    if not nodal_guard(t, n):
        raise InvalidProgression(f"t^(6n) = 1 for t={field.format(t)}, n={n}")
    zeta = primitive_nth_root(field, n)
    c0 = Arrangement.of_lines([nodal_gamma(t * zeta ** k).dual() for k in range(n)], field)
    return c0.union(labeled_lambda(c0))


def nodal_primed_block(n: int, t, field: Field) -> Arrangement:
    """Closed form of the primed block: label ``r`` is ``D(gamma(t^-2 zeta^r))``."""
    t = field(t)
    zeta = primitive_nth_root(field, n)
    return Arrangement.of_lines([nodal_gamma(t ** -2 * zeta ** r).dual() for r in range(n)], field)


def cuspidal_realization(field: Field, p0, step=1) -> Arrangement:
    """Realization of ``M_l`` from the additive group of the cuspidal cubic in characteristic ``l``."""
    from .cubic import cuspidal_progression
    ell = field.characteristic
    prog = cuspidal_progression(field, p0, step)
    p0, step = field(p0), field(step)
    primed_pts = [cuspidal_point(-2 * p0 + r * step) for r in range(ell)]
    return prog.dual().union(Arrangement.of_points(primed_pts, field).dual())


# -- fiber experiments ---------------------------------------------------------

def projective_points(field: Field):
    """Every point of ``P^2`` over a finite prime field."""
    elems = list(field.elements())
    o, z = field.one, field.zero
    for a in elems:
        for b in elems:
            yield ProjPoint(a, b, o)
    for a in elems:
        yield ProjPoint(a, o, z)
    yield ProjPoint(o, z, z)


def _map_for(n: int):
    if n == 5:
        from .pentagon import lambda0_formula
        return lambda0_formula
    if n == 6:
        from .hexagon import lambda23_formula
        return lambda23_formula
    return None


@dataclass
class FiberReport:
    samples: int
    histogram: dict
    skipped: int
    exceptional: list

    def fraction(self, size: int) -> float:
        good = sum(self.histogram.values())
        return self.histogram.get(size, 0) / good if good else 0.0

    def to_json(self) -> dict:
        return {"samples": self.samples,
                "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
                "skipped": self.skipped,
                "exceptional": self.exceptional}


def brute_force_fibers(fn, domain):
    """Map every domain point through ``fn``; returns ``(image -> preimages, skipped)``."""
    fibers: dict = {}
    skipped = []
    for w in domain:
        try:
            q = fn(w)
        except (PolylabError, ZeroDivisionError):
            skipped.append(w)
            continue
        fibers.setdefault(q, []).append(w)
    return fibers, skipped


def lambda_degree_experiment(n: int, field: Field, samples: int, rng: random.Random | None = None,
                             fn=None) -> FiberReport:
    """Histogram of exact ``F_p``-rational preimage counts of sampled targets.

    ``n = 5`` uses the pentagon map, ``n = 6`` the hexagon map, and any other
    ``n`` the parameter map ``t -> t^-2`` of the nodal family.  Targets are
    images of uniformly sampled parameters; sampled parameters where the map
    is undefined are counted in ``skipped``.
    """
    rng = rng or random.Random(0)
    fn = fn or _map_for(n)
    if fn is None:
        domain = [x for x in field.elements() if x != 0]
        fibers = Counter(x ** -2 for x in domain)
        hist = Counter(fibers[domain[rng.randrange(len(domain))] ** -2] for _ in range(samples))
        return FiberReport(samples, dict(hist), 0, [])
    domain = list(projective_points(field))
    fibers, bad = brute_force_fibers(fn, domain)
    bad_set = set(bad)
    hist: Counter = Counter()
    skipped = 0
    exceptional = []
    for _ in range(samples):
        w = domain[rng.randrange(len(domain))]
        if w in bad_set:
            skipped += 1
            continue
        q = fn(w)
        size = len(fibers[q])
        hist[size] += 1
        if size != 4 and len(exceptional) < 20:
            exceptional.append({"source": [field.format(c) for c in w.coords],
                                "target": [field.format(c) for c in q.coords], "fiber": size})
    return FiberReport(samples, dict(hist), skipped, exceptional)


def three_torsion_datum(field: Field, n: int, rng: random.Random, budget: int = 20000):
    """A torsion datum whose curve has all nine 3-torsion points rational.

    Returns ``(datum, three_torsion)`` where ``three_torsion`` lists the nine
    points of ``E[3]`` as projective points.
    """
    from .errors import NotFound
    from .cubic import iter_weierstrass
    for curve in iter_weierstrass(field.p, rng, budget):
        order = curve.order()
        if order % 9 or order % n:
            continue
        e3 = curve.torsion_points(3)
        if len(e3) != 9:
            continue
        t = curve.point_of_order(n, rng)
        if not t:
            continue
        datum = TorsionDatum(curve.group(), curve.to_proj(t), n, curve)
        try:
            random_valid_point(datum, rng, tries=30)
        except InvalidProgression:
            continue
        return datum, [curve.to_proj(P) for P in e3]
    raise NotFound(f"no curve over F_{field.p} with rational E[3] and an order-{n} point")


# -- fibers over the algebraic closure -------------------------------------------

def _standard_monomial_count(leading, nvars):
    """Number of monomials outside the monomial ideal ``leading``; ``None`` if infinite."""
    bounds = []
    for v in range(nvars):
        pure = [m[v] for m in leading if all(m[w] == 0 for w in range(nvars) if w != v)]
        if not pure:
            return None
        bounds.append(min(pure))
    total = 0
    stack = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == nvars:
            if not any(all(prefix[i] >= m[i] for i in range(nvars)) for m in leading):
                total += 1
            continue
        for e in range(bounds[len(prefix)]):
            stack.append(prefix + (e,))
    return total


def geometric_fiber_size(exprs, target: ProjPoint, field: Field):
    """Number of preimages of ``target`` over the algebraic closure of ``F_p``, off the base locus.

    ``exprs`` are the three coordinate polynomials of a plane rational map.
    Returns ``(size, reduced)``; ``size`` is ``None`` when the fiber is a curve.
    ``reduced`` tells whether a linear form separates the points, in which
    case they are distinct; otherwise ``size`` counts multiplicity.
    """
    import sympy
    from .constants import X, Y, Z
    p = field.p
    q = [int(c) for c in target.coords]
    i = next(k for k in range(3) if q[k] % p)
    size = None
    # a fixed sequence of coordinate changes per field, so the expansion is cached;
    # the change puts the fiber in the chart z = 1 with distinct y-coordinates
    for attempt in range(8):
        f = _transformed(tuple(exprs), p, attempt)
        eqs = [q[j] * f[i] - q[i] * f[j] for j in range(3) if j != i]
        at_infinity = _fiber_on_line_at_infinity(f, eqs, i, p)
        if at_infinity:
            continue
        u = sympy.Symbol("u")
        aff = [e.subs(Z, 1) for e in eqs] + [u * f[i].subs(Z, 1) - 1]
        G = sympy.groebner(aff, u, X, Y, order="grevlex", modulus=p)
        if list(G.exprs) == [1]:
            return 0, True
        leading = [sympy.Poly(g, u, X, Y).monoms(order="grevlex")[0] for g in G.exprs]
        size = _standard_monomial_count(leading, 3)
        if size is None:
            return None, False
        reduced = _separated(G, leading, (u, X, Y), p, attempt)
        if reduced:
            return size, True
    return size, False


def _separated(G, leading, gens, p: int, attempt: int) -> bool:
    """Multiplication by a linear form on the quotient ring has a squarefree characteristic polynomial."""
    import sympy
    from itertools import product
    bounds = [min(m[v] for m in leading if all(m[w] == 0 for w in range(3) if w != v)) for v in range(3)]
    basis = [e for e in product(*(range(b) for b in bounds))
             if not any(all(e[i] >= m[i] for i in range(3)) for m in leading)]
    index = {e: k for k, e in enumerate(basis)}
    u, x, y = gens
    form = x + (attempt + 2) * y
    rows = []
    for e in basis:
        mono = u ** e[0] * x ** e[1] * y ** e[2]
        rem = G.reduce(sympy.expand(form * mono))[1]
        row = [0] * len(basis)
        if rem != 0:
            for m, c in sympy.Poly(rem, *gens).terms():
                row[index[m]] = int(c) % p
        rows.append(row)
    lam = sympy.Symbol("lam")
    charpoly = sympy.Poly(sympy.Matrix(rows).charpoly(lam).as_expr(), lam, modulus=p)
    return charpoly.degree() == len(basis) and sympy.gcd(charpoly, charpoly.diff(lam)).degree() == 0


@lru_cache(maxsize=64)
def _transformed(exprs: tuple, p: int, attempt: int):
    """``exprs`` composed with the ``attempt``-th random invertible linear map mod ``p``."""
    import sympy
    from .constants import X, Y, Z
    rng = random.Random(p * 1000 + attempt)
    while True:
        A = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        if sympy.Matrix(A).det() % p:
            break
    sub = {X: A[0][0] * X + A[0][1] * Y + A[0][2] * Z,
           Y: A[1][0] * X + A[1][1] * Y + A[1][2] * Z,
           Z: A[2][0] * X + A[2][1] * Y + A[2][2] * Z}
    out = []
    for e in exprs:
        poly = sympy.Poly(sympy.sympify(e).xreplace(sub), X, Y, Z, modulus=p)
        out.append(poly.as_expr())
    return tuple(out)


def _fiber_on_line_at_infinity(f, eqs, i, p) -> bool:
    """Whether any fiber point lies on ``z = 0`` (off the base locus)."""
    import sympy
    from .constants import X, Y, Z
    for chart in ({Z: 0, Y: 1}, {Z: 0, Y: 0, X: 1}):
        gs = [sympy.Poly(e.subs(chart), X, modulus=p) if e.subs(chart).has(X) else e.subs(chart)
              for e in eqs]
        fi = f[i].subs(chart)
        if X in chart:
            if all(sympy.Integer(g) % p == 0 for g in gs) and sympy.Integer(fi) % p != 0:
                return True
            continue
        polys = [g if isinstance(g, sympy.Poly) else sympy.Poly(g, X, modulus=p) for g in gs]
        g = polys[0]
        for h in polys[1:]:
            g = sympy.gcd(g, h)
        if g.is_zero:
            return True
        fip = sympy.Poly(fi, X, modulus=p)
        while g.degree() > 0:
            common = sympy.gcd(g, fip)
            if common.degree() == 0:
                return True
            g = sympy.div(g, common)[0]
    return False


def geometric_degree_experiment(n: int, field: Field, samples: int, rng: random.Random | None = None) -> FiberReport:
    """Fiber sizes over the algebraic closure for images of random parameters."""
    from .constants import LAMBDA0, LAMBDA23
    exprs = {5: LAMBDA0, 6: LAMBDA23}[n]
    fn = _map_for(n)
    rng = rng or random.Random(0)
    domain_size = field.p ** 2 + field.p + 1
    points = None
    hist: Counter = Counter()
    skipped = 0
    exceptional = []
    for _ in range(samples):
        if points is None:
            points = list(projective_points(field))
        w = points[rng.randrange(domain_size)]
        try:
            target = fn(w)
        except PolylabError:
            skipped += 1
            continue
        size, reduced = geometric_fiber_size(exprs, target, field)
        key = size if size is not None else "curve"
        hist[key] += 1
        if (size != 4 or not reduced) and len(exceptional) < 20:
            exceptional.append({"source": [field.format(c) for c in w.coords],
                                "target": [field.format(c) for c in target.coords],
                                "fiber": key, "reduced": reduced})
    return FiberReport(samples, dict(hist), skipped, exceptional)

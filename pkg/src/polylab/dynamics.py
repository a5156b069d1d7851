"""Orbits of the operators, the order of -2 modulo r and the period table."""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from enum import Enum

from sympy import divisors

from .arrangement import Arrangement, lambda_op, pair_count_ok, profile_to_json, stats
from .errors import NotCoprime, NotFound, OperatorFailure, PolylabError
from .projective import projectively_equivalent


class EqualityMode(str, Enum):
    LABELED = "labeled"
    SET = "set"
    PROJECTIVE = "projective"


def order_of_minus2(r: int) -> int:
    """Least ``m >= 1`` with ``(-2)^m = 1 mod r``."""
    if r % 2 == 0:
        raise NotCoprime(f"-2 is not a unit modulo the even number {r}")
    if r < 3:
        raise ValueError("r must be at least 3")
    base = (-2) % r
    x, m = base, 1
    while x != 1:
        x = x * base % r
        m += 1
    return m


def _order_dividing(r: int, k: int) -> int:
    """Order of ``-2`` modulo ``r`` when it is known to divide ``k``."""
    for d in divisors(k):
        if pow(-2, d, r) == 1 % r:
            return d
    raise ValueError(f"the order of -2 mod {r} does not divide {k}")


@dataclass
class PeriodRow:
    k: int
    rs: list

    @property
    def count(self) -> int:
        return len(self.rs)

    @property
    def lowest(self):
        return self.rs[0] if self.rs else None

    def to_json(self) -> dict:
        return {"k": self.k, "N": self.count, "lowest": self.lowest, "r": self.rs}


def period_row(k: int) -> PeriodRow:
    """Every ``r > 1`` for which ``-2`` has order exactly ``k`` modulo ``r``."""
    if k < 1:
        raise ValueError("k must be positive")
    modulus = 2 ** k - (-1) ** k
    rs = [r for r in divisors(modulus) if r > 1 and _order_dividing(r, k) == k]
    return PeriodRow(k, rs)


def period_table(kset) -> dict:
    return {k: period_row(k) for k in sorted(set(kset))}


def table_rows(table: dict) -> list:
    """One record per ``(k, r)`` pair, with the row totals repeated."""
    return [{"k": k, "r": r, "N": row.count, "lowest": row.lowest} for k, row in table.items() for r in row.rs]


def table_csv(table: dict) -> str:
    lines = ["k,r,N,lowest_r"]
    lines += [f"{d['k']},{d['r']},{d['N']},{d['lowest']}" for d in table_rows(table)]
    return "\n".join(lines) + "\n"


# -- orbits -------------------------------------------------------------------

def _same(a: Arrangement, b: Arrangement, mode: EqualityMode) -> bool:
    if mode == EqualityMode.LABELED:
        return a.members == b.members
    if mode == EqualityMode.SET:
        return a.as_set() == b.as_set()
    if len(a) != len(b):
        return False
    return projectively_equivalent(a.members, b.members) is not None


@dataclass
class OrbitRecord:
    iterates: list
    period: int | None
    mode: EqualityMode = EqualityMode.SET
    op_name: str = dc_field(default="")

    def union(self) -> Arrangement:
        """Members of one full period (or of every iterate when no period was found), deduplicated."""
        span = self.iterates[: self.period] if self.period else self.iterates
        seen = []
        known = set()
        for arr in span:
            for m in arr.members:
                if m not in known:
                    known.add(m)
                    seen.append(m)
        return Arrangement(span[0].kind, tuple(seen), span[0].field)

    def to_json(self) -> dict:
        from .io import arrangement_to_json
        return {"op": self.op_name, "mode": self.mode.value, "period": self.period,
                "iterates": [arrangement_to_json(a) for a in self.iterates]}


def orbit(C: Arrangement, op, max_iter: int, mode=EqualityMode.SET, op_name: str = "") -> OrbitRecord:
    """Iterate ``op`` until an iterate equals ``C`` under ``mode`` (or ``max_iter`` steps)."""
    mode = EqualityMode(mode)
    iterates = [C]
    current = C
    for step in range(1, max_iter + 1):
        try:
            current = op(current)
        except PolylabError as exc:
            raise OperatorFailure(step - 1, exc) from exc
        if _same(current, C, mode):
            return OrbitRecord(iterates, step, mode, op_name)
        iterates.append(current)
    return OrbitRecord(iterates, None, mode, op_name)


@dataclass
class UnionStats:
    lines: int
    profile: dict
    pair_count_ok: bool

    def to_json(self) -> dict:
        return {"lines": self.lines, "profile": profile_to_json(self.profile), "pair_count_ok": self.pair_count_ok}


def orbit_union_stats(rec: OrbitRecord, extra: Arrangement | None = None) -> UnionStats:
    """Singularity profile of the union of one period, optionally with extra lines added."""
    arr = rec.union()
    if extra is not None:
        add = [m for m in extra.members if m not in arr.as_set()]
        arr = Arrangement(arr.kind, arr.members + tuple(add), arr.field)
    prof = stats(arr)
    return UnionStats(len(arr), prof, pair_count_ok(arr, prof))


# -- operator handles -------------------------------------------------------------

def unlabeled_lambda(C: Arrangement) -> Arrangement:
    """``Lambda_{{2},{k}}`` for odd ``n = 2k+1`` and ``Lambda_{{2},{k-1,k}}`` for even ``n = 2k``."""
    n = len(C)
    k = n // 2
    nset = {k} if n % 2 else {k - 1, k}
    return lambda_op(C, {2}, nset)


def operator(name: str):
    """Look up an arrangement operator by its CLI name."""
    from . import hexagon, modular, pentagon
    from .arrangement import psi_op

    def lambda23_op(C):
        img = hexagon.lambda23(C)
        if not img.is_hexagon:
            raise NotFound("Lambda_2|3 did not return a hexagon")
        return img.labeled

    def psi(P):
        n = len(P)
        k = n // 2
        return psi_op(P, {2}, {k} if n % 2 else {k - 1, k})

    table = {
        "lambda": unlabeled_lambda,
        "labeled_lambda": modular.labeled_lambda,
        "psi": psi,
        "lambda0": pentagon.lambda0,
        "lambda_plus": pentagon.lambda_plus,
        "lambda_minus": pentagon.lambda_minus,
        "lambda_pm": pentagon.lambda_plus,
        "pentagram": pentagon.pentagram,
        "lambda23": lambda23_op,
    }
    if name not in table:
        raise KeyError(f"unknown operator {name!r}; choose from {sorted(table)}")
    return table[name]


# -- periodic seeds ---------------------------------------------------------------

@dataclass
class PeriodicSeed:
    """A torsion datum of order ``n`` plus a base point ``p`` of order ``r`` (``<p>`` meets ``<t>`` trivially)."""

    datum: object
    p: object
    r: int

    def lines(self) -> Arrangement:
        g = self.datum.group
        pts = [g.add(self.p, g.scalar_mul(j, self.datum.t)) for j in range(self.datum.n)]
        return Arrangement.of_points(pts, self.datum.field).dual()

    def torsion_lines(self) -> Arrangement:
        """Duals of the points of ``<t>``, origin included."""
        return Arrangement.of_points(self.datum.subgroup(), self.datum.field).dual()


def periodic_seed(n: int, r: int, q: int, rng: random.Random | None = None, budget: int = 20000) -> PeriodicSeed:
    """Search ``F_q`` for a curve with points of exact orders ``n`` and ``r``, ``gcd(n, r) = 1``."""
    from math import gcd
    from .cubic import TorsionDatum, iter_weierstrass
    if gcd(n, r) != 1:
        raise ValueError("n and r must be coprime so that <p> and <t> meet trivially")
    rng = rng or random.Random(0)
    for curve in iter_weierstrass(q, rng, budget):
        if curve.order() % (n * r):
            continue
        t = curve.point_of_order(n, rng)
        p = curve.point_of_order(r, rng)
        if not t or not p:
            continue
        datum = TorsionDatum(curve.group(), curve.to_proj(t), n, curve)
        return PeriodicSeed(datum, curve.to_proj(p), r)
    raise NotFound(f"no curve over F_{q} with points of order {n} and {r}")


def seed_primes(n: int, r: int, count: int = 2, start: int | None = None) -> list:
    """Primes ``q`` whose Hasse interval contains a multiple of ``n*r``."""
    from sympy import isprime
    m = n * r
    q = start or max(m - 2 * int(m ** 0.5), 11)
    out = []
    while len(out) < count:
        if isprime(q) and q > 3:
            lo = q + 1 - 2 * int(q ** 0.5)
            hi = q + 1 + 2 * int(q ** 0.5)
            if any(k % m == 0 for k in range(max(lo, 1), hi + 1)):
                out.append(q)
        q += 1
    return out

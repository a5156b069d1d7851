"""Deliberately naive reference computations used to cross-check the library."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import sympy


def naive_order_minus2(r: int) -> int:
    x, m = (-2) % r, 1
    while x % r != 1 % r:
        x = x * (-2) % r
        m += 1
        if m > r:
            raise ValueError("not a unit")
    return m


def naive_period_row(k: int) -> list:
    """Every ``r > 1`` with ``ord_r(-2) == k``, scanning all odd ``r`` up to ``2^k + 1``."""
    return [r for r in range(3, 2 ** k + 2, 2) if naive_order_minus2(r) == k]


def naive_curve_order(a: int, b: int, p: int) -> int:
    squares = {}
    for y in range(p):
        squares[y * y % p] = squares.get(y * y % p, 0) + 1
    return 1 + sum(squares.get((x ** 3 + a * x + b) % p, 0) for x in range(p))


def sympy_det(a, b, c) -> Fraction:
    """Determinant over Q via sympy (rational inputs only)."""
    m = sympy.Matrix([[sympy.Rational(str(x)) for x in v] for v in (a, b, c)])
    return Fraction(str(m.det()))


def dependent_triples(vectors) -> set:
    """1-based triples of dependent rows, using exact sympy determinants."""
    return {(i + 1, j + 1, k + 1) for i, j, k in combinations(range(len(vectors)), 3)
            if sympy_det(vectors[i], vectors[j], vectors[k]) == 0}


def mn_nonbases(n: int) -> set:
    """Non-bases of M_n written out from the defining congruence."""
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            for r in range(n):
                if (i + j + r) % n == 0:
                    out.add(tuple(sorted((i + 1, j + 1, n + r + 1))))
    return out

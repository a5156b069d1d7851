"""Hard-coded polynomial data for the pentagon and hexagon families.

Every entry here is guarded by a test that recomputes it from incidences,
so a typo in a coefficient surfaces as a failing test.
"""
from __future__ import annotations

from functools import lru_cache

import sympy

X, Y, Z = sympy.symbols("x y z")

# degree-8 self-map of the pentagon realization space, uncorrected form
LAMBDA0_UNCORRECTED = (
    "x**5*y**2*z-4*x**4*y**3*z+5*x**3*y**4*z-2*x**2*y**5*z-2*x**5*y*z**2+6*x**4*y**2*z**2"
    "-2*x**3*y**3*z**2-5*x**2*y**4*z**2+3*x*y**5*z**2+6*x**2*y**3*z**3+x*y**4*z**3-y**5*z**3"
    "-x**4*z**4+3*x**3*y*z**4+2*x**2*y**2*z**4-4*x*y**3*z**4-x**2*y*z**5+y**3*z**5",
    "x**4*y**4-x**3*y**5-5*x**4*y**3*z+4*x**3*y**4*z+x**2*y**5*z+8*x**4*y**2*z**2"
    "-2*x**3*y**3*z**2-6*x**2*y**4*z**2-4*x**4*y*z**3-6*x**3*y**2*z**3+8*x**2*y**3*z**3"
    "+2*x*y**4*z**3+4*x**3*y*z**4+x**2*y**2*z**4-5*x*y**3*z**4-x**2*y*z**5+y**3*z**5",
    "x**5*y**2*z-4*x**4*y**3*z+4*x**3*y**4*z-2*x**5*y*z**2+8*x**4*y**2*z**2-6*x**3*y**3*z**2"
    "-4*x**2*y**4*z**2+x**4*y*z**3-8*x**3*y**2*z**3+12*x**2*y**3*z**3+x*y**4*z**3"
    "+2*x**2*y**2*z**4-6*x*y**3*z**4+y**3*z**5",
)

# The uncorrected first coordinate lacks x^5z^3 - x^4yz^3 - 6x^3y^2z^3;
# without them (1:0:1) is not a base point.  The incidence computation restores them.
LAMBDA0 = (
    LAMBDA0_UNCORRECTED[0] + "+x**5*z**3-x**4*y*z**3-6*x**3*y**2*z**3",
    LAMBDA0_UNCORRECTED[1],
    LAMBDA0_UNCORRECTED[2],
)

# columns of the normal matrix of Lambda^0(C0(w)), w = (x:y:z)
# (writing (x, y, z) for the first column would return the input line itself;
# the join of p_{3,4} and p_{2,5} is (x, x, z))
LAMBDA0_NORMALS = (
    ("x", "x", "z"),
    ("y-x", "0", "y-z"),
    ("z", "y", "z"),
    ("x", "y", "0"),
    ("0", "1", "1"),
)

# the eight lines beyond the coordinate frame in the hexagon family
HEXAGON_NORMALS = (
    ("x*z", "x**2-2*x*y+y**2+x*z", "y*z"),
    ("x*z", "x**2-x*y+x*z", "x*y-y**2+y*z"),
    ("x*z", "x**2-2*x*y+y**2+x*z", "x*y-y**2+y*z"),
    ("z", "x-y+z", "0"),
    ("x", "0", "x-y+z"),
    ("0", "1", "1"),
    ("y*z", "x**2-2*x*y+y**2+x*z", "y*z"),
    ("x", "x", "y"),
)

# degree-6 self-map of the hexagon realization space
LAMBDA23 = (
    "-4*x**4*y*z+16*x**3*y**2*z-28*x**2*y**3*z+24*x*y**4*z-8*y**5*z-8*x**3*y*z**2"
    "+24*x**2*y**2*z**2-28*x*y**3*z**2+12*y**4*z**2-5*x**2*y*z**3+10*x*y**2*z**3"
    "-6*y**3*z**3-x*y*z**4+y**2*z**4",
    "-2*x**5*y+10*x**4*y**2-18*x**3*y**3+14*x**2*y**4-4*x*y**5-7*x**4*y*z+26*x**3*y**2*z"
    "-35*x**2*y**3*z+20*x*y**4*z-4*y**5*z-9*x**3*y*z**2+24*x**2*y**2*z**2-21*x*y**3*z**2"
    "+6*y**4*z**2-5*x**2*y*z**3+9*x*y**2*z**3-4*y**3*z**3-x*y*z**4+y**2*z**4",
    "x**6-8*x**5*y+25*x**4*y**2-38*x**3*y**3+28*x**2*y**4-8*x*y**5+3*x**5*z-19*x**4*y*z"
    "+44*x**3*y**2*z-44*x**2*y**3*z+16*x*y**4*z+3*x**4*z**2-15*x**3*y*z**2"
    "+24*x**2*y**2*z**2-12*x*y**3*z**2+x**3*z**3-4*x**2*y*z**3+4*x*y**2*z**3",
)

S1_PRIME = ("-x**2+x*y-x*z", "-x**2+2*x*y-y**2-x*z+y*z", "y*z")
S2_PRIME = ("z", "x-y+z", "x")
S_PENTAGRAM = ("x**2-x*y", "x**2-2*x*y+y**2", "y*z")

HEXAGON_INDETERMINACY = ((0, 0, 1), (-1, 0, 1), (1, 1, 0))


@lru_cache(maxsize=None)
def terms(expr: str) -> tuple:
    """``((coeff, (i, j, k)), ...)`` for a polynomial in x, y, z with integer coefficients."""
    poly = sympy.Poly(sympy.sympify(expr), X, Y, Z)
    return tuple((int(c), tuple(m)) for m, c in poly.terms())


def evaluate(expr: str, v):
    """Evaluate ``expr`` at the coordinate triple ``v`` in whatever field ``v`` lives in."""
    x, y, z = v
    zero = x * 0
    total = zero
    cache: dict = {}
    for c, (i, j, k) in terms(expr):
        key = (i, j, k)
        mono = cache.get(key)
        if mono is None:
            mono = cache[key] = x ** i * y ** j * z ** k
        total = total + c * mono
    return total


def evaluate_triple(exprs, v):
    return tuple(evaluate(e, v) for e in exprs)

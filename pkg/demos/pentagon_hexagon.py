"""Closed-form parameter maps of the five- and six-line families, checked against geometry."""
import random

import sympy

from polylab.constants import LAMBDA0, LAMBDA0_UNCORRECTED, LAMBDA23, X, Y, Z
from polylab.errors import PolylabError
from polylab.hexagon import lambda23_formula, lambda23_geometric
from polylab.pentagon import base_points, lambda0_formula, lambda0_geometric, pentagon_family
from polylab.projective import ProjPoint
from polylab.scalar import Field

rng = random.Random(5)
Q = Field.rationals()


def sample(check, count=50):
    agree = 0
    while agree < count:
        w = ProjPoint(Q.random(rng), Q.random(rng), Q.random_nonzero(rng))
        try:
            a, b = check(w)
        except PolylabError:
            continue
        assert a == b, w
        agree += 1
    return agree


print("lambda0 formula = geometry:", sample(lambda w: (lambda0_formula(w), lambda0_geometric(w))), "parameters")
print("lambda_2|3 formula = mu route:", sample(lambda w: (lambda23_formula(w), lambda23_geometric(w))), "parameters")

diff = sympy.expand(sympy.sympify(LAMBDA0[0]) - sympy.sympify(LAMBDA0_UNCORRECTED[0]))
print("terms restored in the first component of lambda0:", diff)
print("base points of lambda0 over F_11:", [str(w) for w in base_points(Field.prime(11))])

# common zeros of the hexagon map over the algebraic closure
P = [sympy.sympify(e) for e in LAMBDA23]
affine = sympy.solve([p.subs(Z, 1) for p in P], [X, Y], dict=True)
at_infinity = sympy.factor(sympy.gcd(sympy.gcd(P[0].subs(Z, 0), P[1].subs(Z, 0)), P[2].subs(Z, 0)))
print("lambda_2|3 common zeros with z = 1:", affine)
print("lambda_2|3 common zeros with z = 0 (gcd):", at_infinity)

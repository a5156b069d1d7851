"""Realizations of M_n from smooth, nodal and cuspidal cubics, each verified exactly."""
import random

from polylab.cubic import find_rational_base_point, fit_cubic, tate_curve
from polylab.matroid import build_Mn, verify_realization
from polylab.modular import (cuspidal_realization, gamma_map, nodal_parameter, nodal_prime, random_valid_point,
                             realization_datum, realize_from_nodal)
from polylab.scalar import Field

rng = random.Random(2024)

print("smooth cubics over F_p")
for n in range(7, 13):
    F = Field.prime(211)
    datum = realization_datum(F, n, rng)
    arr = gamma_map(datum, random_valid_point(datum, rng))
    fit = fit_cubic(arr.dual().members)
    print(f"  n={n:2d} over {F}: realizes M_n={verify_realization(arr, build_Mn(n)).ok}, cubic rank {fit.rank}")

print("rational points on Tate normal forms")
for n, param in [(5, "5/3"), (6, "3/2"), (8, "5/3"), (9, "-2"), (10, "-2"), (12, "3")]:
    datum = tate_curve(n, param)
    p = find_rational_base_point(datum, 20)
    ok = verify_realization(gamma_map(datum, p), build_Mn(n)).ok
    print(f"  n={n:2d}, parameter {param}: base point {p}, realizes M_n={ok}")

print("nodal cubics")
for n in range(5, 13):
    F = Field.prime(nodal_prime(n))
    arr = realize_from_nodal(n, nodal_parameter(n, F, rng), F)
    print(f"  n={n:2d} over {F}: {verify_realization(arr, build_Mn(n)).ok}")

K = Field.quadratic(7)
print("cuspidal cubic in characteristic 7:", verify_realization(cuspidal_realization(K, K.generator()), build_Mn(7)).ok)

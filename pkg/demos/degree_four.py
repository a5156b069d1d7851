"""Fiber sizes of the parameter maps: rational brute force versus counts over the closure."""
import random
import sys

from polylab.modular import geometric_degree_experiment, lambda_degree_experiment
from polylab.scalar import Field

samples = int(sys.argv[1]) if len(sys.argv) > 1 else 10
for name, n in (("lambda0", 5), ("lambda23", 6)):
    rational = lambda_degree_experiment(n, Field.prime(101), 500, random.Random(1))
    print(f"{name}: F_101-rational fibers {dict(sorted(rational.histogram.items()))}, "
          f"size 4 in {rational.fraction(4):.0%}")
    for p in (101, 1009):
        rep = geometric_degree_experiment(n, Field.prime(p), samples, random.Random(p))
        hist = dict(sorted(rep.histogram.items(), key=lambda kv: str(kv[0])))
        print(f"  over the closure of F_{p}: {hist}, size 4 in {rep.fraction(4):.0%}")

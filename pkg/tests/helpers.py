"""Shared generators for the test-suite (cached where expensive)."""
from __future__ import annotations

import random
from functools import lru_cache

from polylab.modular import random_valid_point, realization_datum
from polylab.projective import ProjLine, ProjPoint
from polylab.scalar import Field

REALIZATION_PRIMES = (101, 211, 307, 401, 499)


@lru_cache(maxsize=None)
def fp_instance(n: int, p: int, seed: int = 0):
    """``(datum, base point)`` over ``F_p`` for a curve with an order-``n`` point."""
    rng = random.Random(1000 * n + p + seed)
    datum = realization_datum(Field.prime(p), n, rng)
    return datum, random_valid_point(datum, rng)


def random_line(field: Field, rng: random.Random) -> ProjLine:
    while True:
        v = [field.random(rng) for _ in range(3)]
        if any(c != 0 for c in v):
            return ProjLine(v)


def random_point(field: Field, rng: random.Random) -> ProjPoint:
    return random_line(field, rng).dual()

import random

import pytest
from hypothesis import given, strategies as st

from helpers import fp_instance
from oracles import mn_nonbases
from polylab.errors import NotAUnit
from polylab.matroid import (MISSING, UNEXPECTED, Rank3Matroid, affine_relabel, build_Mn, matroid_of_arrangement,
                             relabel_arrangement, satisfies_basis_exchange, verify_realization)
from polylab.modular import gamma_map
from polylab.arrangement import Arrangement
from polylab.projective import line


@pytest.mark.parametrize("n", range(5, 13))
def test_Mn_matches_definition(n):
    mat = build_Mn(n)
    assert mat.nonbases == mn_nonbases(n)
    assert len(mat.nonbases) == n * (n - 1) // 2


@pytest.mark.parametrize("n", [5, 6])
def test_Mn_is_a_matroid(n):
    assert satisfies_basis_exchange(build_Mn(n))


@given(st.integers(5, 12), st.integers(0, 100), st.integers(0, 100))
def test_affine_relabel_is_automorphism(n, a, b):
    from math import gcd
    if gcd(a, n) != 1:
        with pytest.raises(NotAUnit):
            affine_relabel(n, a, b)
        return
    perm = affine_relabel(n, a, b)
    assert sorted(perm) == list(range(1, 2 * n + 1))
    assert build_Mn(n).relabel(perm) == build_Mn(n)


def test_relabel_preserves_realization():
    datum, base = fp_instance(8, 101)
    arr = gamma_map(datum, base)
    rng = random.Random(3)
    for _ in range(10):
        a = rng.choice([1, 3, 5, 7])
        perm = affine_relabel(8, a, rng.randrange(8))
        assert verify_realization(relabel_arrangement(arr, perm), build_Mn(8)).ok
    assert matroid_of_arrangement(arr) == build_Mn(8)


def test_violation_kinds():
    arr = Arrangement.of_lines([line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(0, 0, 1)])
    rep = verify_realization(arr, Rank3Matroid(4, frozenset({(1, 2, 4)})))
    kinds = {k for _, k in rep.violations}
    assert not rep.ok and kinds == {UNEXPECTED, MISSING}
    assert Rank3Matroid.from_json(build_Mn(7).to_json()) == build_Mn(7)
    with pytest.raises(ValueError):
        Rank3Matroid(3, frozenset({(1, 2, 4)}))

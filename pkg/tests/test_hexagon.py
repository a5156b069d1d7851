import random

import pytest

from helpers import random_point
from polylab.errors import Degenerate, DegenerateInput, Indeterminate
from polylab.hexagon import (first_hexagon, hexagon_family, hexagon_symmetries, hexagon_matroid, klein_group, lambda23,
                             lambda23_formula, mu_inverse, pentagram_parameter, rotate, s1p, s2p, s_pentagram,
                             second_hexagon)
from polylab.matroid import build_Mn, verify_realization
from polylab.scalar import Field

Q = Field.rationals()


def _params(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        w = random_point(Q, rng)
        try:
            hexagon_family(w)
            lambda23_formula(w)
        except (Degenerate, Indeterminate):
            continue
        out.append(w)
    return out


def test_family_realizes_relabelled_M6():
    for w in _params(5, 1):
        arr = hexagon_family(w)
        assert verify_realization(arr, hexagon_matroid()).ok
        assert not verify_realization(arr, build_Mn(6)).ok


def test_lambda23_maps_C0_to_C1():
    for w in _params(5, 2):
        img = lambda23(first_hexagon(w))
        assert img.is_hexagon and img.labeled == second_hexagon(w)


def test_mu_inverse_roundtrip():
    for w in _params(10, 3):
        assert mu_inverse(first_hexagon(w)) == w


def test_pentagram_parameter_is_s():
    for w in _params(10, 4):
        try:
            expected = s_pentagram(w)
            got = pentagram_parameter(w)
        except (DegenerateInput, Indeterminate):
            continue
        assert got == expected


def test_klein_group_involutions():
    for w in _params(10, 5):
        try:
            for g in klein_group():
                assert g(g(w)) == w
            assert s1p(s2p(w)) == s2p(s1p(w))
        except Indeterminate:
            continue


def test_s_outside_klein_group():
    witnessed = False
    for w in _params(20, 7):
        try:
            images = [g(w) for g in klein_group()]
            sw = hexagon_symmetries(w)["s"]
        except Indeterminate:
            continue
        if sw not in images:
            witnessed = True
            break
    assert witnessed


def test_s2p_is_involution_on_samples():
    rng = random.Random(9)
    done = 0
    while done < 100:
        w = random_point(Q, rng)
        try:
            assert s2p(s2p(w)) == w
        except Indeterminate:
            continue
        done += 1


def test_rotate():
    C = first_hexagon(_params(1, 6)[0])
    assert rotate(rotate(C, 2), 4) == C
    with pytest.raises(ValueError):
        lambda23(rotate(C, 1).union(second_hexagon(_params(1, 6)[0])))

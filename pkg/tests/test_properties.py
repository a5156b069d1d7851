"""Invariant-based property suites across modules."""
import random

from hypothesis import given, strategies as st

from helpers import fp_instance, random_line
from polylab import io
from polylab.arrangement import Arrangement
from polylab.cubic import WeierstrassCurve, fit_cubic
from polylab.errors import Degenerate, PolylabError
from polylab.matroid import affine_relabel, build_Mn, relabel_arrangement, verify_realization
from polylab.modular import gamma_map
from polylab.projective import ProjPoint
from polylab.scalar import Field

seeds = st.integers(0, 2 ** 32)


@given(seeds, st.sampled_from([23, 101, 211]))
def test_group_law_axioms(seed, p):
    rng = random.Random(seed)
    try:
        curve = WeierstrassCurve(rng.randrange(p), rng.randrange(p), p)
    except Degenerate:
        return
    g = curve.group()
    pts = [curve.random_point(rng) for _ in range(3)]
    a, b, c = pts
    assert g.add(a, b) == g.add(b, a)
    assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))
    assert g.add(a, g.neg(a)) == g.origin
    assert g.scalar_mul(curve.order(), a) == g.origin


@given(seeds, st.sampled_from([Field.rationals(), Field.prime(101)]))
def test_chasles_grid(seed, field):
    rng = random.Random(seed)
    A = [random_line(field, rng) for _ in range(3)]
    B = [random_line(field, rng) for _ in range(3)]
    try:
        pts = Arrangement.of_points([ProjPoint(_cross(a.coords, b.coords)) for a in A for b in B], field)
    except (ValueError, PolylabError):
        return
    fit = fit_cubic(pts.members[:8])
    if fit.rank == 8:
        assert all(c.contains(pts.members[8]) for c in fit.pencil)


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


@given(st.sampled_from([(7, 101), (8, 211), (9, 307), (11, 401), (12, 499)]), st.integers(0, 100), st.integers(0, 100))
def test_affine_relabel_preserves_realizations(np_, a, b):
    from math import gcd
    n, p = np_
    if gcd(a, n) != 1:
        return
    datum, base = fp_instance(n, p)
    moved = relabel_arrangement(gamma_map(datum, base), affine_relabel(n, a, b))
    assert verify_realization(moved, build_Mn(n)).ok


@given(seeds, st.sampled_from([Field.rationals(), Field.prime(499), Field.quadratic(7)]))
def test_json_roundtrip(seed, field):
    rng = random.Random(seed)
    lines = []
    for _ in range(6):
        l = random_line(field, rng)
        if l not in lines:
            lines.append(l)
    arr = Arrangement.of_lines(lines, field)
    text = io.dumps(io.arrangement_to_json(arr))
    import json
    back = io.arrangement_from_json(json.loads(text))
    assert back == arr
    assert io.dumps(io.arrangement_to_json(back)) == text

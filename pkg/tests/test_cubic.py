import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import naive_curve_order
from polylab.cubic import (PlaneCubic, WeierstrassCurve, cuspidal_cubic, cuspidal_parameter,
                           cuspidal_point, cuspidal_progression, find_rational_base_point, find_torsion_point,
                           fit_cubic, nodal_cubic, nodal_gamma, nodal_inverse, rational_points, tate_curve,
                           third_intersection, valid_progression, weierstrass_from_plane)
from polylab.errors import Degenerate, InvalidProgression, NoCubic, NotFound, SingularPoint
from polylab.linalg import det3
from polylab.projective import point
from polylab.scalar import Field

F = Field.prime(101)


@pytest.mark.parametrize("a,b,p", [(1, 1, 23), (2, 3, 97), (0, 7, 101), (5, 0, 103)])
def test_point_count_matches_oracle(a, b, p):
    assert WeierstrassCurve(a, b, p).order() == naive_curve_order(a, b, p)


def test_singular_weierstrass_rejected():
    with pytest.raises(Degenerate):
        WeierstrassCurve(0, 0, 101)


@given(st.integers(0, 10 ** 6))
def test_projective_group_matches_affine_formulas(seed):
    rng = random.Random(seed)
    try:
        curve = WeierstrassCurve(rng.randrange(1, 101), rng.randrange(1, 101), 101)
    except Degenerate:
        return
    pts = curve.points()
    if len(pts) < 2:
        return
    g = curve.group()
    P, Q = rng.choice(pts), rng.choice(pts)
    assert g.add(curve.to_proj(P), curve.to_proj(Q)) == curve.to_proj(curve.add(P, Q))
    k = rng.randrange(-20, 20)
    assert g.scalar_mul(k, curve.to_proj(P)) == curve.to_proj(curve.mul(k, P))
    assert curve.mul(curve.order(), P) is None


def test_third_intersection_is_collinear():
    curve = WeierstrassCurve(2, 3, 97)
    g = curve.group()
    P, Q = (curve.to_proj(x) for x in curve.points()[:2])
    R = third_intersection(g.curve, P, Q)
    assert g.curve.contains(R)
    assert det3(P.coords, Q.coords, R.coords) == 0


def test_singular_point_raises():
    c = nodal_cubic(F)
    with pytest.raises(SingularPoint):
        third_intersection(c, point(0, 0, 1, field=F), nodal_gamma(F(3)))


def test_fit_cubic_ranks():
    rng = random.Random(5)
    curve = WeierstrassCurve(2, 3, 97)
    pts = [curve.to_proj(x) for x in rng.sample(curve.points(), 12)]
    fit = fit_cubic(pts)
    assert fit.rank == 9 and fit.unique
    assert weierstrass_from_plane(fit.cubic) == (2, 3)
    assert fit_cubic(pts[:7]).rank == 7 and len(fit_cubic(pts[:7]).pencil) == 3
    generic = [point(x, x * x * x * x + 3 * x + 1, 1) for x in range(10)]
    with pytest.raises(NoCubic):
        fit_cubic(generic)
    assert PlaneCubic.from_json(fit.cubic.to_json()) == fit.cubic


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9, 10, 12])
def test_tate_curves(n):
    for param in (Fraction(5, 3), Fraction(3, 2), Fraction(-2), Fraction(3), Fraction(7, 2)):
        try:
            datum = tate_curve(n, param)
        except Degenerate:
            continue
        g = datum.group
        assert g.has_exact_order(datum.t, n)
        assert len(set(datum.subgroup())) == n
        return
    pytest.fail(f"no admissible Tate parameter for n={n}")


def test_rational_base_point():
    datum = tate_curve(6, "3/2")
    p = find_rational_base_point(datum, 20)
    assert valid_progression(datum, p)
    assert all(datum.group.contains(q) for q in rational_points(datum.ainvs, 5))
    with pytest.raises(NotFound):
        find_rational_base_point(datum, 0)


def test_find_torsion_point():
    datum = find_torsion_point(F, 9, random.Random(1))
    assert datum.group.has_exact_order(datum.t, 9)
    with pytest.raises(NotFound):
        find_torsion_point(F, 200)


@given(st.integers(1, 100), st.integers(1, 100))
def test_nodal_group_is_multiplicative(a, b):
    a, b = F(a), F(b)
    pts = [nodal_gamma(x) for x in (a, b, 1 / (a * b))]
    assert all(nodal_cubic(F).contains(q) for q in pts)
    assert det3(*(q.coords for q in pts)) == 0
    assert nodal_inverse(pts[0]) == a


@given(st.integers(0, 100), st.integers(0, 100))
def test_cuspidal_group_is_additive(a, b):
    a, b = F(a), F(b)
    pts = [cuspidal_point(x) for x in (a, b, -a - b)]
    assert all(cuspidal_cubic(F).contains(q) for q in pts)
    assert det3(*(q.coords for q in pts)) == 0
    assert cuspidal_parameter(pts[0]) == a


def test_cuspidal_progression_needs_extension():
    with pytest.raises(InvalidProgression):
        cuspidal_progression(Field.prime(7), 3, 1)
    K = Field.quadratic(7)
    assert len(cuspidal_progression(K, K.generator(), 1)) == 7

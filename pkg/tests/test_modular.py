import random

import pytest

from helpers import fp_instance
from polylab.arrangement import Arrangement
from polylab.cubic import find_rational_base_point, tate_curve
from polylab.errors import DomainError, InvalidProgression, NotCollinear
from polylab.matroid import build_Mn, verify_realization
from polylab.modular import (cuspidal_realization, gamma_map, gamma_via_lambda, labeled_lambda, lambda_deletion_rule,
                             lambda_degree_experiment, multiply_by_minus2_via_psi, nodal_guard, nodal_parameter,
                             nodal_primed_block, nodal_prime, realize_from_nodal, torsion_progression)
from polylab.scalar import Field


@pytest.mark.parametrize("n,p", [(7, 101), (8, 211), (10, 307)])
def test_progression_basics(n, p):
    datum, base = fp_instance(n, p)
    tp = torsion_progression(datum, base)
    assert len(set(tp.points)) == n and all(datum.group.contains(q) for q in tp.points)
    shifted = tp.shifted(1)
    assert shifted.points == tp.points[1:] + tp.points[:1]


def test_invalid_progressions():
    datum, base = fp_instance(7, 101)
    with pytest.raises(InvalidProgression):
        torsion_progression(datum, datum.t)
    with pytest.raises(DomainError):
        torsion_progression(datum, _off_curve(datum))


def _off_curve(datum):
    from polylab.projective import point
    F = datum.field
    for x in range(1, 50):
        q = point(x, 1, 1, field=F)
        if not datum.group.contains(q):
            return q


@pytest.mark.parametrize("n,p", [(7, 101), (9, 211), (12, 499)])
def test_gamma_two_routes_agree(n, p):
    datum, base = fp_instance(n, p)
    assert gamma_map(datum, base) == gamma_via_lambda(datum, base)


def test_gamma_over_Q():
    datum = tate_curve(6, "3/2")
    arr = gamma_map(datum, find_rational_base_point(datum, 20))
    assert verify_realization(arr, build_Mn(6)).ok


@pytest.mark.parametrize("n,p", [(7, 499), (9, 211), (9, 499), (11, 499)])
def test_deletion_rule(n, p):
    datum, base = fp_instance(n, p)
    C0 = Arrangement.of_lines(gamma_map(datum, base).members[:n], datum.field)
    C1 = labeled_lambda(C0)
    for c in range(n):
        assert lambda_deletion_rule(C0, c).as_set() == {C1[c]}


def test_deletion_rule_small_field_contains_target():
    # over small fields extra k-rich lines can appear by accident; the target line is always among them
    F = Field.prime(29)
    C0 = Arrangement.of_lines(realize_from_nodal(7, F(2), F).members[:7], F)
    C1 = labeled_lambda(C0)
    assert all(C1[c] in lambda_deletion_rule(C0, c).as_set() for c in range(7))


def test_labeled_lambda_rejects_random_lines():
    rng = random.Random(4)
    F = Field.prime(101)
    from helpers import random_line
    lines = []
    while len(lines) < 7:
        l = random_line(F, rng)
        if l not in lines:
            lines.append(l)
    with pytest.raises(NotCollinear):
        labeled_lambda(Arrangement.of_lines(lines, F))


def test_mulneg2_requires_points():
    datum, base = fp_instance(7, 101)
    prog = torsion_progression(datum, base).arrangement()
    with pytest.raises(ValueError):
        multiply_by_minus2_via_psi(prog.dual())


@pytest.mark.parametrize("n", range(5, 13))
def test_nodal_closed_form(n):
    F = Field.prime(nodal_prime(n))
    t = nodal_parameter(n, F, random.Random(n))
    arr = realize_from_nodal(n, t, F)
    assert arr.members[n:] == nodal_primed_block(n, t, F).members
    assert nodal_guard(t, n)


def test_nodal_prime_table():
    assert [nodal_prime(n) for n in range(5, 13)] == [41, 31, 29, 41, 37, 41, 89, 61]


def test_cuspidal_only_in_matching_characteristic():
    K = Field.quadratic(7)
    assert verify_realization(cuspidal_realization(K, K.generator() + 2, 3), build_Mn(7)).ok


def test_nodal_degree_is_two():
    report = lambda_degree_experiment(7, Field.prime(29), 50, random.Random(0))
    assert report.histogram == {2: 50}

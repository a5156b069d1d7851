from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polylab.errors import NoRoot
from polylab.scalar import Field, field_of, multiplicative_order, primitive_nth_root, sqrt_in_field

FIELDS = [Field.rationals(), Field.prime(7), Field.prime(101), Field.prime(499), Field.quadratic(7)]


def elements(field):
    if field.kind == "Q":
        return st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10 ** 6)
    if field.kind == "Fp":
        return st.integers(0, field.p - 1).map(field)
    return st.tuples(st.integers(0, field.p - 1), st.integers(0, field.p - 1)).map(field)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_field_axioms(field):
    @given(elements(field), elements(field), elements(field))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + field.zero == a and a * field.one == a
        assert a - a == field.zero
        if a != 0:
            assert a * (field.one / a) == field.one
    check()


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_format_parse_roundtrip(field):
    @given(elements(field))
    def check(a):
        assert field.parse(field.format(a)) == a
        assert field_of(field(a)) == field
    check()
    assert Field.from_json(field.to_json()) == field


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Field.prime(7)(1) / Field.prime(7)(0)
    with pytest.raises(ZeroDivisionError):
        Field.quadratic(7).zero.inverse()


def test_fp2_generator_is_nonsquare_root():
    F = Field.quadratic(7)
    s = F.generator()
    assert s * s == F(F.nonresidue)
    assert len(list(F.elements())) == 49
    assert sum(1 for x in F.elements() if x != 0 and x ** 48 == 1) == 48


def test_sqrt_and_roots():
    F = Field.prime(11)
    assert sqrt_in_field(F, F(5)) ** 2 == F(5)
    with pytest.raises(NoRoot):
        sqrt_in_field(F, F(2))
    assert sqrt_in_field(Field.rationals(), Fraction(9, 4)) ** 2 == Fraction(9, 4)
    for n, p in [(7, 29), (12, 61), (5, 41)]:
        z = primitive_nth_root(Field.prime(p), n)
        assert multiplicative_order(z) == n


def test_cross_field_coercion_is_refused():
    with pytest.raises(TypeError):
        Field.rationals()(Field.prime(7)(3))
    with pytest.raises(ValueError):
        Field.prime(11)(Field.prime(7)(3))
    assert Field.prime(7)(Fraction(1, 2)) * 2 == 1

import random

import pytest

from oracles import naive_order_minus2, naive_period_row
from polylab.dynamics import (EqualityMode, operator, order_of_minus2, orbit, orbit_union_stats, period_row,
                              period_table, periodic_seed, table_csv, table_rows)
from polylab.errors import NotCoprime, OperatorFailure
from polylab.pentagon import lambda0


@pytest.mark.parametrize("r", [3, 5, 7, 9, 11, 13, 15, 21, 43, 683, 2731])
def test_order_matches_oracle(r):
    assert order_of_minus2(r) == naive_order_minus2(r)


def test_even_modulus():
    with pytest.raises(NotCoprime):
        order_of_minus2(12)


@pytest.mark.parametrize("k", range(3, 14))
def test_period_row_matches_exhaustive_scan(k):
    assert period_row(k).rs == naive_period_row(k)


def test_period_csv_has_one_row_per_modulus():
    table = period_table([12])
    text = table_csv(table)
    assert len(text.strip().splitlines()) == 1 + 16
    assert len(table_rows(table)) == 16


def test_unknown_operator():
    with pytest.raises(KeyError):
        operator("nope")


def test_small_orbit_and_failure():
    seed = periodic_seed(5, 9, 37, random.Random(37))
    rec = orbit(seed.lines(), lambda0, 20, EqualityMode.SET)
    assert rec.period == 3
    st = orbit_union_stats(rec)
    assert (st.lines, st.profile, st.pair_count_ok) == (15, {2: 15, 3: 30}, True)
    labeled = orbit(seed.lines(), lambda0, 20, "labeled")
    assert labeled.period is None or labeled.period % 3 == 0
    with pytest.raises(OperatorFailure):
        orbit(seed.lines(), operator("lambda23"), 3)

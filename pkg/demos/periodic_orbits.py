"""Periods of -2 and the singularities of periodic operator orbits."""
import random

from polylab.dynamics import order_of_minus2, orbit, orbit_union_stats, period_table, periodic_seed, seed_primes
from polylab.modular import labeled_lambda
from polylab.pentagon import lambda0

for k, row in period_table(list(range(3, 14)) + [22, 28, 60]).items():
    print(f"k={k:2d}: N={row.count:4d}, lowest r={row.lowest}")

for n, r in [(5, 9), (5, 7), (5, 11), (5, 13), (7, 13)]:
    op = lambda0 if n == 5 else labeled_lambda
    for q in seed_primes(n, r, 2):
        seed = periodic_seed(n, r, q, random.Random(q))
        rec = orbit(seed.lines(), op, 100, "set")
        st = orbit_union_stats(rec)
        line = f"n={n} r={r:2d} F_{q}: period {rec.period} (order of -2: {order_of_minus2(r)}), {st.lines} lines, {st.profile}"
        if (n, r) == (5, 13):
            full = orbit_union_stats(rec, seed.torsion_lines())
            line += f"; with torsion lines {full.lines} lines, {full.profile}"
        print(line)

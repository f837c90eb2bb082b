"""Why uncoordinated exploration does not scale.

Uniform, independent exploration over L actions per agent has to stumble on
each of the L**n joint configurations. The expected number of steps to see
them all is M * H_M with M = L**n, and M ln M is a lower bound.
"""

from influmarl.exploration_bound import coverage_sweep, expected_coverage_time, lower_bound

L = 3
print(f"{'n':>2} {'M':>8} {'simulated':>12} {'M*H_M':>12} {'M ln M':>12}")
for row in coverage_sweep(range(1, 6), L, trials=2000, seed=0):
    print(f"{row.n:>2} {row.M:>8} {row.empirical_mean:>12.1f} {row.analytic_expectation:>12.1f} {row.lower_bound:>12.1f}")

# beyond what is worth simulating, the formula alone
for n in (8, 12, 16):
    print(f"n={n:>2}: expected {expected_coverage_time(n, L):.3e} steps (bound {lower_bound(n, L):.3e})")

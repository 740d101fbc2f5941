"""
Uncertain costs: the interval Bellman equation
==============================================

Travel times known only up to an interval.  Solving ``X = A X + B`` with the
lower data and with the upper data gives the tightest interval containing the
distance to the target for every possible realization, and the check below
confirms it by sampling.
"""
import numpy as np

from idempotent import iterate, sample_united_check, solve_interval, spectral_criterion, split
from idempotent.interval import interval_matrix
from idempotent.semiring import MIN_PLUS

# %%
# In min-plus the canonical order is reversed, so an interval is written
# [pessimistic, optimistic]: [5, 3] means "between 3 and 5 minutes".
inf = "inf"
A = interval_matrix(MIN_PLUS, [
    [inf, [5, 3], [12, 9], inf],
    [inf, inf, [4, 4], [10, 7]],
    [inf, [2, 1], inf, [3, 2]],
    [inf, inf, inf, inf],
], mode="strong")
B = interval_matrix(MIN_PLUS, [[inf], [inf], [inf], [0]], mode="strong")

X = solve_interval(A, B)
lo, hi = split(X)
for i, (worst, best) in enumerate(zip(lo.col(0), hi.col(0))):
    print(f"node {i}: distance to target in [{best}, {worst}]")

# %%
# Every sampled realization lands inside, and the two corner problems
# reproduce the bounds exactly.
report = sample_united_check(A, B, samples=2000, seed=1)
print(report.as_dict())

# %%
# No cycle gets cheaper than 0, so plain fixed-point iteration from the
# zero matrix settles within n steps on the same answer.
print("spectral criterion:", spectral_criterion(A))
trace = iterate(A, B)
print("stabilized after", trace.stabilized_at, "steps;",
      "matches closure:", trace.fixed_point == X)

# %%
# The sampler is seeded, so its report is reproducible.
assert report.as_dict() == sample_united_check(A, B, samples=2000, seed=1).as_dict()
np.testing.assert_equal(report.failures, 0)

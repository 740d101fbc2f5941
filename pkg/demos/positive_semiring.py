"""
Beyond idempotency: nonnegative reals
=====================================

The closure and interval machinery never uses ``x + x = x``.  Over the
nonnegative reals the closure is the Neumann series ``(E - A)^-1`` and the
interval solution still encloses every sampled point solution.
"""
import numpy as np

from idempotent import Matrix, closure, sample_united_check, solve_interval, split
from idempotent.generate import random_positive_problem
from idempotent.semiring import NONNEG_REAL

A = Matrix(NONNEG_REAL, [[0.2, 0.5], [0.3, 0.1]])
print(np.array(closure(A).tolist()))
print(np.linalg.inv(np.eye(2) - np.array(A.tolist())))

# %%
# Interval data with entries in [0, 0.9].  Row sums stay below one so every
# matrix inside the interval has a convergent series.
rng = np.random.default_rng(0)
IA, IB = random_positive_problem(3, 1, rng)
lo, hi = split(solve_interval(IA, IB))
print("lower:", lo.col(0))
print("upper:", hi.col(0))
print(sample_united_check(IA, IB, samples=500, seed=0).as_dict())

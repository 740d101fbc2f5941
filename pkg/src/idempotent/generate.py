"""Random elements, matrices and interval problems for testing and demos.

Finite reals are drawn on a grid of quarters half of the time so that ties,
boundary cases (cycle weight exactly 1) and exact float arithmetic all show up.
"""
import math

from .interval import Interval, IntervalSemiring, extension
from .matrix import Matrix, karp_eigenvalue
from .semiring import (
    BooleanSemiring, CountingSemiring, MaxMin, MaxPlus, MaxPlusHat, MinPlus, NonnegReal,
    ProductSemiring,
)

QUANTUM = 0.25


def _real(rng, scale=10.0, grid=None):
    grid = rng.random() < 0.5 if grid is None else grid
    x = float(rng.uniform(-scale, scale))
    return round(x / QUANTUM) * QUANTUM if grid else x


def _unwrap(S):
    return S.base if isinstance(S, CountingSemiring) else S


def random_element(S, rng, zero_prob=0.1, nonzero=False):
    """One random element of ``S``; zero with probability ``zero_prob``."""
    T = _unwrap(S)
    if not nonzero and rng.random() < zero_prob:
        return S.zero
    if isinstance(T, IntervalSemiring):
        return random_interval(T, rng, zero_prob=0.0 if nonzero else zero_prob)
    if isinstance(T, ProductSemiring):
        nz = nonzero or T.punctured
        return tuple(random_element(f, rng, zero_prob, nonzero=nz) for f in T.factors)
    if isinstance(T, BooleanSemiring):
        return True if nonzero else bool(rng.integers(2))
    if isinstance(T, NonnegReal):
        x = float(rng.uniform(0.0, 3.0))
        return round(x * 4) / 4 if rng.random() < 0.5 and round(x * 4) else x
    if isinstance(T, (MaxMin, MaxPlusHat)) and rng.random() < 0.05:
        return math.inf
    if isinstance(T, (MaxPlus, MinPlus, MaxMin, MaxPlusHat)):
        return _real(rng)
    raise TypeError(f"no generator for {S!r}")


def random_interval(I, rng, zero_prob=0.1):
    """Random interval of the extension ``I`` (weak or strong)."""
    b = I.base
    if rng.random() < zero_prob:
        return I.zero
    x = random_element(b, rng, zero_prob=0.0 if I.strong else 0.2, nonzero=I.strong)
    y = random_element(b, rng, zero_prob=0.0 if I.strong else 0.2, nonzero=I.strong)
    order = b.leq(x, y)
    if order is True:
        lo, hi = x, y
    elif order is False:
        lo, hi = y, x
    else:
        lo, hi = x, b.add(x, y)
    return Interval(lo, hi, I.strong)


def random_matrix(S, m, n, rng, density=0.7):
    z = S.zero
    return Matrix(S, [[random_element(S, rng, zero_prob=0.0) if rng.random() < density else z
                       for _ in range(n)] for _ in range(m)], check=False)


def random_semidefinite(S, n, rng, density=0.7):
    """Random max-plus or min-plus matrix whose cycles all have weight <= 1.

    Entries lie on the quarter grid, so every path weight is computed exactly;
    the shift is the smallest grid step that makes the critical cycle mean
    non-positive (max-plus) or non-negative (min-plus).
    """
    T = _unwrap(S)
    if not isinstance(T, (MaxPlus, MinPlus)):
        raise TypeError("random_semidefinite supports max-plus and min-plus")
    z = S.zero
    rows = [[_real(rng, grid=True) if rng.random() < density else z for _ in range(n)]
            for _ in range(n)]
    lam = karp_eigenvalue(Matrix(T, rows, check=False))
    if lam == z:
        return Matrix(S, rows, check=False)
    if isinstance(T, MaxPlus):
        shift = -math.ceil(lam / QUANTUM) * QUANTUM
    else:
        shift = -math.floor(lam / QUANTUM) * QUANTUM
    return Matrix(S, [[x if x == z else x + shift for x in r] for r in rows], check=False)


def _lower_than(S, x, rng, allow_zero):
    """A random element below ``x`` in the canonical order of max/min-plus."""
    T = _unwrap(S)
    if x == S.zero:
        return x
    if allow_zero and rng.random() < 0.15:
        return S.zero
    step = QUANTUM * int(rng.integers(0, 13))
    if rng.random() < 0.3:
        step = 0.0
    return x - step if isinstance(T, MaxPlus) else x + step


def random_interval_problem(S, n, s, rng, strong=True, semidefinite=True, density=0.7):
    """Interval Bellman data ``(A, B)`` over max-plus or min-plus.

    The upper matrix of ``A`` is semi-definite when requested; lower bounds
    are obtained by lowering entries, so every matrix inside ``A`` is too.
    """
    I = extension(S, strong)
    if semidefinite:
        A_hi = random_semidefinite(S, n, rng, density)
    else:
        A_hi = random_matrix(S, n, n, rng, density)
    B_hi = random_matrix(S, n, s, rng, density=max(density, 0.5))
    A = Matrix(I, [[Interval(_lower_than(S, x, rng, not strong), x, strong) for x in r]
                   for r in A_hi.rows], check=False)
    B = Matrix(I, [[Interval(_lower_than(S, x, rng, not strong), x, strong) for x in r]
                   for r in B_hi.rows], check=False)
    return A, B


def random_positive_problem(n, s, rng, upper=0.9, strong=False):
    """Interval data over the nonnegative reals with entries in ``[0, upper]``.

    Rows of the upper matrix are rescaled to sum to at most ``upper`` so the
    closure series converges for every matrix inside the interval.
    """
    from .semiring import NONNEG_REAL as R

    I = extension(R, strong)
    hi = []
    for _ in range(n):
        row = [float(rng.uniform(0.0, upper)) if rng.random() < 0.8 else 0.0 for _ in range(n)]
        total = sum(row)
        if total > upper:
            row = [x * upper / total for x in row]
        hi.append(row)
    A = Matrix(I, [[Interval(x * float(rng.uniform(0.3, 1.0)) if x else 0.0, x, strong)
                    for x in r] for r in hi], check=False)
    B = Matrix(I, [[_pos_interval(rng, strong) for _ in range(s)] for _ in range(n)],
               check=False)
    return A, B


def _pos_interval(rng, strong):
    hi = float(rng.uniform(0.0, 2.0))
    lo = hi * float(rng.uniform(0.3, 1.0))
    return Interval(lo, hi, strong)

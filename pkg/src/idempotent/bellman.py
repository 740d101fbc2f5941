"""Solvers for the Bellman equation ``X = A X + B``.

The minimal solution is ``A* B``.  For interval data the same formula applied
to the lower and upper matrices separately gives the tightest interval
enclosing every minimal solution obtainable from point data inside the
intervals, in polynomial time.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .errors import ClosureDiverges, DimensionMismatch, MaxIterationsExceeded
from .interval import IntervalSemiring, merge, split
from .matrix import Matrix, closure, spectral_radius

log = logging.getLogger(__name__)

# stabilization tolerance for non-idempotent semirings
POSITIVE_RTOL = 1e-10


@dataclass(frozen=True)
class BellmanProblem:
    A: Matrix
    B: Matrix

    def __post_init__(self):
        n = self.A.n
        if self.B.shape[0] != n:
            raise DimensionMismatch(f"B has {self.B.shape[0]} rows, A is {n}x{n}")
        if self.A.profile != self.B.profile:
            raise ValueError("A and B live in different semirings")

    @property
    def is_interval(self):
        return isinstance(self.A.profile, IntervalSemiring)

    def solve(self):
        return solve_interval(self.A, self.B) if self.is_interval else solve_point(self.A, self.B)


@dataclass
class IterationTrace:
    """Iterates ``X_0, X_1, ...``; ``stabilized_at`` is the first k with X_k = X_(k+1).

    ``precondition`` records whether ``X_0 <= A* B`` was verified (``True``),
    refuted (``False``) or could not be checked (``None``).
    """

    iterates: List[Matrix] = field(default_factory=list)
    stabilized_at: Optional[int] = None
    converged: bool = False
    precondition: Optional[bool] = None

    @property
    def fixed_point(self):
        return self.iterates[self.stabilized_at] if self.converged else None


def solve_point(A, B):
    """Minimal solution ``A* B``; raises :class:`ClosureDiverges` if ``A*`` does not exist."""
    BellmanProblem(A, B)
    return closure(A) @ B


def solve_interval(A, B):
    """Interval solution ``[lower(A)* lower(B), upper(A)* upper(B)]``.

    Both bounds are themselves minimal solutions for corner data, so no
    narrower interval can contain the united minimal solution set.
    """
    BellmanProblem(A, B)
    if not isinstance(A.profile, IntervalSemiring):
        raise TypeError("solve_interval expects interval matrices; use solve_point")
    A_lo, A_hi = split(A)
    B_lo, B_hi = split(B)
    try:
        lo = solve_point(A_lo, B_lo)
    except ClosureDiverges as exc:
        raise ClosureDiverges(f"lower bound: {exc}", exc.cycle) from None
    try:
        hi = solve_point(A_hi, B_hi)
    except ClosureDiverges as exc:
        raise ClosureDiverges(f"upper bound: {exc}", exc.cycle) from None
    return merge(lo, hi, "strong" if A.profile.strong else "weak")


def _stable(X, Y, rtol):
    return X == Y if rtol == 0.0 else X.isclose(Y, rtol)


def iterate(A, B, X0=None, max_k=None, rtol=None):
    """Run ``X_(k+1) = A X_k + B`` until two consecutive iterates agree.

    ``X0`` defaults to the zero matrix and ``max_k`` to ``2n + 2``.  Idempotent
    iterates are compared exactly; other semirings use ``rtol`` (default
    ``1e-10``).  Raises :class:`MaxIterationsExceeded` carrying the trace if no
    agreement is reached within ``max_k`` steps.
    """
    BellmanProblem(A, B)
    S = A.profile
    n = A.n
    if X0 is None:
        X0 = Matrix.zeros(S, n, B.shape[1])
    if X0.shape != B.shape:
        raise DimensionMismatch(f"X0 is {X0.shape}, B is {B.shape}")
    if max_k is None:
        max_k = 2 * n + 2
    if rtol is None:
        rtol = 0.0 if S.idempotent else POSITIVE_RTOL

    trace = IterationTrace(iterates=[X0])
    try:
        target = solve_interval(A, B) if isinstance(S, IntervalSemiring) else solve_point(A, B)
        trace.precondition = X0.leq(target) is True
    except ClosureDiverges:
        trace.precondition = None
    if trace.precondition is not True:
        log.info("iterate: initial approximation not verified below A*B (%s)",
                 trace.precondition)

    X = X0
    for k in range(max_k):
        Y = A @ X + B
        trace.iterates.append(Y)
        if _stable(X, Y, rtol):
            trace.stabilized_at = k
            trace.converged = True
            log.debug("iterate: stabilized at k=%d", k)
            return trace
        X = Y
    raise MaxIterationsExceeded(f"no stabilization within {max_k} iterations", trace)


def spectral_criterion(A):
    """``rho(A) <= 1``: the iteration from any X0 <= A*B stabilizes within n steps."""
    S = A.profile
    rho = spectral_radius(A)
    base = S.base if isinstance(S, IntervalSemiring) else S
    return base.leq(rho, base.one) is True


@dataclass
class UnitedCheckReport:
    samples: int
    failures: int
    lower_attained: bool
    upper_attained: bool
    divergent: int = 0
    first_failure: Optional[int] = None

    @property
    def ok(self):
        return self.failures == 0 and self.lower_attained and self.upper_attained

    def as_dict(self):
        return {
            "samples": self.samples,
            "failures": self.failures,
            "divergent": self.divergent,
            "lower_attained": self.lower_attained,
            "upper_attained": self.upper_attained,
        }


def sample_point(M, rng):
    """Point matrix drawn inside the interval matrix ``M``.

    Each entry is the lower bound, the upper bound, or (where the base
    semiring can interpolate) a random blend of the two, with equal odds.
    """
    base = M.profile.base
    rows = []
    for row in M.rows:
        out = []
        for x in row:
            pick = rng.integers(3)
            if pick == 2:
                v = base.interpolate(x.lo, x.hi, float(rng.random()))
                if v is None:
                    v = x.lo if rng.integers(2) == 0 else x.hi
            else:
                v = x.lo if pick == 0 else x.hi
            out.append(v)
        rows.append(out)
    return Matrix(base, rows, check=False)


def sample_united_check(A, B, samples=1000, seed=0, rtol=None):
    """Check the interval solution against sampled point problems.

    Every sampled ``A* B`` must lie inside ``solve_interval(A, B)`` and the
    two corner problems must reproduce its bounds.  Non-idempotent bases are
    compared with relative tolerance ``rtol`` (default ``1e-9``).
    """
    base = A.profile.base
    if rtol is None:
        rtol = 0.0 if base.idempotent else 1e-9
    X = solve_interval(A, B)
    X_lo, X_hi = split(X)
    A_lo, A_hi = split(A)
    B_lo, B_hi = split(B)

    lower_attained = solve_point(A_lo, B_lo).isclose(X_lo, rtol)
    upper_attained = solve_point(A_hi, B_hi).isclose(X_hi, rtol)

    rng = np.random.default_rng(seed)
    failures = divergent = 0
    first = None
    for s in range(samples):
        A_s, B_s = sample_point(A, rng), sample_point(B, rng)
        try:
            T = solve_point(A_s, B_s)
        except ClosureDiverges:
            divergent += 1
            failures += 1
            first = s if first is None else first
            continue
        if not _inside(base, X_lo, T, X_hi, rtol):
            failures += 1
            first = s if first is None else first
    if failures:
        log.warning("sample_united_check: %d of %d samples outside the interval solution",
                    failures, samples)
    return UnitedCheckReport(samples, failures, lower_attained, upper_attained, divergent, first)


def _inside(base, lo, T, hi, rtol):
    for a, t, b in zip(_entries(lo), _entries(T), _entries(hi)):
        if not ((base.leq(a, t) is True or base.isclose(a, t, rtol))
                and (base.leq(t, b) is True or base.isclose(t, b, rtol))):
            return False
    return True


def _entries(M):
    for r in M.rows:
        yield from r

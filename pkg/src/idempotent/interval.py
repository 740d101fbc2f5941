"""Weak and strong interval extensions of a semiring.

An interval ``[lo, hi]`` with ``lo <= hi`` is operated on bound-wise:
``[a, b] (+) [c, d] = [a + c, b + d]`` and likewise for the product.  Because
both operations are monotone this is the tightest interval containing every
pointwise result, and the extension is again a semiring, so distributivity
and associativity of interval matrix products survive (unlike classical
interval arithmetic).

The strong extension keeps only intervals whose lower bound is nonzero, plus
``[0, 0]``.  Over an entire base it inherits cancellation and stabilization,
which the weak extension loses.
"""
from dataclasses import dataclass
from typing import Any

from .errors import CapabilityMissing, DimensionMismatch, InvalidBounds, StrongViolation
from .matrix import Matrix
from .semiring import Semiring


@dataclass(frozen=True)
class Interval:
    lo: Any
    hi: Any
    strong: bool = False

    def __repr__(self):
        tag = "s" if self.strong else ""
        return f"{tag}[{self.lo!r}, {self.hi!r}]"


class IntervalSemiring(Semiring):
    """The interval extension I(S) (``strong=False``) or its strong variant."""

    def __init__(self, base, strong=False):
        if strong and not base.has("entire"):
            raise CapabilityMissing(
                f"strong interval extension of {base.name} needs an entire semiring")
        self.base = base
        self.strong = strong
        self.name = ("strong-" if strong else "") + f"interval({base.name})"
        self.zero = Interval(base.zero, base.zero, strong)
        self.one = Interval(base.one, base.one, strong)
        self.top = None if base.top is None else Interval(base.top, base.top, strong)

        f = base.flags
        flags = f & {"idempotent", "commutative", "entire", "freshman_dream", "has_top",
                     "positive"}
        if {"algebraically_closed", "freshman_dream"} <= f:
            flags |= {"algebraically_closed"}
        if strong:
            flags |= f & {"cancellative", "stabilizing"}
        if not base.idempotent:
            flags |= {"positive"}
        self.flags = frozenset(flags)

    @property
    def key(self):
        return ("interval", self.base.key, self.strong)

    # -- construction -------------------------------------------------------
    def new(self, lo, hi):
        """Validated interval; see :func:`interval_new`."""
        base = self.base
        base.validate(lo)
        base.validate(hi)
        order = base.leq(lo, hi)
        if order is None:
            raise InvalidBounds(f"bounds {lo!r} and {hi!r} are incomparable")
        if not order:
            raise InvalidBounds(f"lower bound {lo!r} exceeds upper bound {hi!r}")
        if self.strong and lo == base.zero and hi != base.zero:
            raise StrongViolation(
                f"[{lo!r}, {hi!r}] has a zero lower bound and a nonzero upper bound")
        return Interval(lo, hi, self.strong)

    def embed(self, x):
        """Degenerate interval ``[x, x]``."""
        return self.new(x, x)

    def promote(self, x):
        return x if isinstance(x, Interval) else self.embed(x)

    # -- arithmetic ----------------------------------------------------------
    def add(self, x, y):
        b = self.base
        return Interval(b.add(x.lo, y.lo), b.add(x.hi, y.hi), self.strong)

    def mul(self, x, y):
        b = self.base
        return Interval(b.mul(x.lo, y.lo), b.mul(x.hi, y.hi), self.strong)

    def scalar_closure(self, x):
        b = self.base
        return Interval(b.scalar_closure(x.lo), b.scalar_closure(x.hi), self.strong)

    def nth_root(self, y, n):
        self.require("algebraically_closed", "freshman_dream")
        b = self.base
        lo = b.nth_root(y.lo, n)
        hi = b.nth_root(y.hi, n)
        # both roots exist but need not be ordered; lo + hi still has n-th power y.hi
        return Interval(lo, b.add(lo, hi), self.strong)

    def leq(self, x, y):
        b = self.base
        lo, hi = b.leq(x.lo, y.lo), b.leq(x.hi, y.hi)
        if lo is True and hi is True:
            return True
        if b.leq(y.lo, x.lo) is True and b.leq(y.hi, x.hi) is True:
            return False
        return None

    def isclose(self, x, y, rtol=0.0):
        return self.base.isclose(x.lo, y.lo, rtol) and self.base.isclose(x.hi, y.hi, rtol)

    # -- set relations --------------------------------------------------------
    def contains(self, x, t):
        b = self.base
        return b.leq(x.lo, t) is True and b.leq(t, x.hi) is True

    def subset(self, x, y):
        b = self.base
        return b.leq(y.lo, x.lo) is True and b.leq(x.hi, y.hi) is True

    # -- elements ---------------------------------------------------------------
    def is_element(self, x):
        if not isinstance(x, Interval) or x.strong != self.strong:
            return False
        b = self.base
        if not (b.is_element(x.lo) and b.is_element(x.hi)) or b.leq(x.lo, x.hi) is not True:
            return False
        return not (self.strong and x.lo == b.zero and x.hi != b.zero)

    def coerce(self, value):
        if isinstance(value, Interval):
            return value
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise InvalidBounds(f"an interval needs exactly two bounds, got {value!r}")
            lo, hi = value
        else:
            lo = hi = value
        return self.new(self.base.coerce(lo), self.base.coerce(hi))

    def format(self, x):
        return [self.base.format(x.lo), self.base.format(x.hi)]


_EXTENSIONS = {}


def extension(base, strong=False):
    """Cached :class:`IntervalSemiring` over ``base``."""
    k = (base.key, strong, id(base))
    if k not in _EXTENSIONS:
        _EXTENSIONS[k] = IntervalSemiring(base, strong)
    return _EXTENSIONS[k]


def _mode(mode):
    if mode not in ("weak", "strong"):
        raise ValueError(f"mode must be 'weak' or 'strong', not {mode!r}")
    return mode == "strong"


def interval_new(base, lo, hi, mode="weak"):
    """Build ``[lo, hi]`` over ``base``.

    Raises :class:`InvalidBounds` if ``lo`` is not below ``hi`` (including the
    incomparable case) and :class:`StrongViolation` for ``[0, hi]`` with
    ``hi != 0`` in strong mode.
    """
    return extension(base, _mode(mode)).new(lo, hi)


def _same_mode(x, y):
    if isinstance(x, Interval) and isinstance(y, Interval) and x.strong != y.strong:
        raise ValueError("cannot combine weak and strong intervals")


def iadd(base, x, y):
    """Bound-wise sum; plain scalars are promoted to degenerate intervals."""
    _same_mode(x, y)
    strong = x.strong if isinstance(x, Interval) else getattr(y, "strong", False)
    I = extension(base, strong)
    return I.add(I.promote(x), I.promote(y))


def imul(base, x, y):
    """Bound-wise product; plain scalars are promoted to degenerate intervals."""
    _same_mode(x, y)
    strong = x.strong if isinstance(x, Interval) else getattr(y, "strong", False)
    I = extension(base, strong)
    return I.mul(I.promote(x), I.promote(y))


def icontains(base, x, t):
    return extension(base, x.strong).contains(x, t)


def isubset(base, x, y):
    return extension(base, x.strong).subset(x, y)


def interval_closure(base, x):
    return extension(base, x.strong).scalar_closure(x)


def interval_nth_root(base, y, n):
    return extension(base, y.strong).nth_root(y, n)


def interval_sum(base, intervals, strong=False):
    """Finite fold of intervals under bound-wise addition (``[0, 0]`` if empty)."""
    I = extension(base, strong)
    return I.sum(I.promote(x) for x in intervals)


def bounded_supremum(base, intervals, bound, strong=False):
    """Sum of a collection certified to lie below ``bound``.

    The bound stands in for the boundedness hypothesis under which sums of
    arbitrary families exist; elements above it raise ``ValueError``.
    """
    I = extension(base, strong)
    bound = I.promote(bound)
    items = [I.promote(x) for x in intervals]
    for x in items:
        if I.leq(x, bound) is not True:
            raise ValueError(f"{x!r} is not below the bound {bound!r}")
    return I.sum(items)


# -- interval matrices --------------------------------------------------------

def split(M):
    """Lower and upper matrices of an interval matrix."""
    I = M.profile
    if not isinstance(I, IntervalSemiring):
        raise TypeError("split expects a matrix over an interval semiring")
    lo = Matrix(I.base, [[x.lo for x in row] for row in M.rows], check=False)
    hi = Matrix(I.base, [[x.hi for x in row] for row in M.rows], check=False)
    return lo, hi


def merge(lower, upper, mode="weak"):
    """Interval matrix ``[lower, upper]``; the inverse of :func:`split`."""
    if lower.shape != upper.shape:
        raise DimensionMismatch(f"bound shapes differ: {lower.shape} vs {upper.shape}")
    if lower.profile != upper.profile:
        raise ValueError("bounds live in different semirings")
    I = extension(lower.profile, _mode(mode))
    rows = [[I.new(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(lower.rows, upper.rows)]
    return Matrix(I, rows, check=False)


def degenerate(M, mode="weak"):
    """Embed a point matrix as the interval matrix ``[M, M]``."""
    return merge(M, M, mode)


def interval_matrix(base, entries, mode="weak"):
    """Interval matrix from nested ``[lo, hi]`` pairs (scalars become ``[x, x]``)."""
    I = extension(base, _mode(mode))
    return Matrix(I, [[I.coerce(e) for e in row] for row in entries], check=False)


def naive_set_op(profile, op, xs, ys):
    """Element-wise image ``{x * y}`` of two finite sets under ``add`` or ``mul``.

    This is the set extension that fails to be a semiring in general; kept for
    contrast with the interval extension.
    """
    f = profile.add if op == "add" else profile.mul
    return frozenset(f(x, y) for x in xs for y in ys)

"""Semiring instances: max-plus, min-plus, max-min, Boolean, completed max-plus,
nonnegative reals, and coordinate-wise products.

Every instance exposes the same small surface: ``add``, ``mul``, ``zero``,
``one``, ``leq``, ``scalar_closure``, ``nth_root`` and a set of capability
``flags``.  Elements are plain Python values (numbers, booleans or tuples); the
instance alone decides what they mean, so -inf in max-plus and +inf in
min-plus are both "zero" without any wrapper type.  Infinite operands are
resolved by case analysis before any float arithmetic happens, which keeps
``inf + -inf`` (NaN) out of every code path.

Finite reals may be ``int``, ``float`` or ``fractions.Fraction``.  Exact inputs
stay exact: ``nth_root`` of an integer in max-plus returns a ``Fraction``.
"""
import math
from fractions import Fraction
from numbers import Real

from .errors import CapabilityMissing, ClosureUndefined, ParseError, RootUndefined

INF = math.inf
NEG_INF = -math.inf

FLAGS = frozenset({
    "idempotent", "commutative", "entire", "cancellative", "algebraically_closed",
    "stabilizing", "has_top", "freshman_dream", "linearly_ordered", "semifield",
    "positive",
})


def _is_real(x):
    return isinstance(x, Real) and not isinstance(x, bool) and not (
        isinstance(x, float) and math.isnan(x))


def _divide(y, n):
    # exact inputs stay exact
    if isinstance(y, float):
        return y / n
    return Fraction(y) / n


def parse_real(text):
    """Decode the scalar text encoding: ``"-inf"``, ``"inf"`` or a decimal."""
    if isinstance(text, bool):
        raise ParseError(f"boolean {text!r} is not a real literal")
    if _is_real(text):
        return text
    if not isinstance(text, str):
        raise ParseError(f"cannot read {text!r} as a number")
    t = text.strip().lower()
    if t in ("inf", "+inf", "infinity", "+infinity"):
        return INF
    if t in ("-inf", "-infinity"):
        return NEG_INF
    try:
        value = float(t)
    except ValueError:
        raise ParseError(f"cannot read {text!r} as a number") from None
    if math.isnan(value):
        raise ParseError("NaN is not an element of any semiring here")
    return value


def format_real(x):
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    if isinstance(x, int):
        return x
    return float(x)


class Semiring:
    """Base contract.  Subclasses override the arithmetic.

    ``leq`` returns ``True``/``False`` when the elements are comparable and
    ``None`` when they are not.  For idempotent instances it is the canonical
    order ``x <= y iff x + y == y``; otherwise the instance declares it.
    """

    name = "semiring"
    zero = None
    one = None
    top = None
    flags = frozenset()

    # -- identity ---------------------------------------------------------
    @property
    def key(self):
        return (type(self).__name__, self.name)

    def __eq__(self, other):
        return isinstance(other, Semiring) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    def has(self, *flags):
        return all(f in self.flags for f in flags)

    def require(self, *flags):
        missing = [f for f in flags if f not in self.flags]
        if missing:
            raise CapabilityMissing(f"{self.name} is not {', '.join(missing)}")

    @property
    def idempotent(self):
        return "idempotent" in self.flags

    # -- arithmetic -------------------------------------------------------
    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def prod(self, items):
        acc = self.one
        for x in items:
            acc = self.mul(acc, x)
        return acc

    def pow(self, x, n):
        if n < 0:
            raise ValueError("negative powers are not defined in a semiring")
        acc = self.one
        for _ in range(n):
            acc = self.mul(acc, x)
        return acc

    def scalar_closure(self, x):
        raise ClosureUndefined(f"closure is not available in {self.name}")

    def nth_root(self, y, n):
        raise RootUndefined(f"{self.name} is not algebraically closed")

    def inv(self, x):
        raise CapabilityMissing(f"{self.name} is not a semifield")

    # -- order ------------------------------------------------------------
    def leq(self, x, y):
        if self.add(x, y) == y:
            return True
        if self.add(y, x) == x:
            return False
        return None

    def lt(self, x, y):
        return self.leq(x, y) is True and x != y

    def meet(self, x, y):
        """Greatest lower bound of two comparable elements."""
        c = self.leq(x, y)
        if c is None:
            raise CapabilityMissing(f"{self.name}: meet of incomparable elements")
        return x if c else y

    def isclose(self, x, y, rtol=0.0):
        return x == y

    # -- elements ---------------------------------------------------------
    def is_element(self, x):
        raise NotImplementedError

    def validate(self, x):
        if not self.is_element(x):
            raise ValueError(f"{x!r} is not an element of {self.name}")
        return x

    def parse(self, value):
        x = self.coerce(value)
        self.validate(x)
        return x

    def coerce(self, value):
        return parse_real(value)

    def format(self, x):
        return format_real(x)

    def interpolate(self, lo, hi, t):
        """A point between ``lo`` and ``hi`` for sampling, or ``None``."""
        return None

    def exact(self, x):
        return x

    def inexact(self, x):
        return x


class _RealSemiring(Semiring):
    """Shared plumbing for instances whose finite elements are reals."""

    def is_element(self, x):
        return _is_real(x)

    def isclose(self, x, y, rtol=0.0):
        if x == y:
            return True
        if rtol == 0.0 or math.isinf(x) or math.isinf(y):
            return False
        return math.isclose(x, y, rel_tol=rtol, abs_tol=rtol)

    def interpolate(self, lo, hi, t):
        if math.isinf(lo) or math.isinf(hi):
            return None
        a, b = (lo, hi) if lo <= hi else (hi, lo)
        return min(max(lo + t * (hi - lo), a), b)

    def exact(self, x):
        if isinstance(x, float) and not math.isinf(x):
            return Fraction(x)
        return x

    def inexact(self, x):
        return float(x)


class MaxPlus(_RealSemiring):
    """R u {-inf} with max and +."""

    name = "max-plus"
    zero = NEG_INF
    one = 0
    flags = frozenset({
        "idempotent", "commutative", "entire", "cancellative", "algebraically_closed",
        "stabilizing", "freshman_dream", "linearly_ordered", "semifield",
    })

    def add(self, x, y):
        return x if x >= y else y

    def mul(self, x, y):
        if x == NEG_INF or y == NEG_INF:
            return NEG_INF
        return x + y

    def leq(self, x, y):
        return x <= y

    def scalar_closure(self, x):
        if x <= 0:
            return self.one
        raise ClosureUndefined(f"x* diverges in max-plus for x = {x} > 0")

    def nth_root(self, y, n):
        if n < 1:
            raise ValueError("root order must be a positive integer")
        if y == NEG_INF:
            return NEG_INF
        return _divide(y, n)

    def inv(self, x):
        if x == NEG_INF:
            raise ZeroDivisionError("zero has no inverse")
        return -x

    def is_element(self, x):
        return _is_real(x) and x != INF


class MinPlus(_RealSemiring):
    """R u {+inf} with min and +.  The canonical order reverses <=."""

    name = "min-plus"
    zero = INF
    one = 0
    flags = MaxPlus.flags

    def add(self, x, y):
        return x if x <= y else y

    def mul(self, x, y):
        if x == INF or y == INF:
            return INF
        return x + y

    def leq(self, x, y):
        return x >= y

    def scalar_closure(self, x):
        if x >= 0:
            return self.one
        raise ClosureUndefined(f"x* diverges in min-plus for x = {x} < 0")

    def nth_root(self, y, n):
        if n < 1:
            raise ValueError("root order must be a positive integer")
        if y == INF:
            return INF
        return _divide(y, n)

    def inv(self, x):
        if x == INF:
            raise ZeroDivisionError("zero has no inverse")
        return -x

    def is_element(self, x):
        return _is_real(x) and x != NEG_INF


class MaxMin(_RealSemiring):
    """R u {-inf, +inf} with max and min; every closure exists and equals +inf."""

    name = "max-min"
    zero = NEG_INF
    one = INF
    top = INF
    flags = frozenset({
        "idempotent", "commutative", "entire", "algebraically_closed", "stabilizing",
        "freshman_dream", "linearly_ordered", "has_top",
    })

    def add(self, x, y):
        return x if x >= y else y

    def mul(self, x, y):
        return x if x <= y else y

    def leq(self, x, y):
        return x <= y

    def scalar_closure(self, x):
        return INF

    def nth_root(self, y, n):
        if n < 1:
            raise ValueError("root order must be a positive integer")
        return y


class MaxPlusHat(_RealSemiring):
    """Max-plus completed by a greatest element +inf with inf * zero = zero."""

    name = "max-plus-hat"
    zero = NEG_INF
    one = 0
    top = INF
    flags = frozenset({
        "idempotent", "commutative", "entire", "algebraically_closed", "stabilizing",
        "freshman_dream", "linearly_ordered", "has_top",
    })

    def add(self, x, y):
        return x if x >= y else y

    def mul(self, x, y):
        if x == NEG_INF or y == NEG_INF:
            return NEG_INF
        if x == INF or y == INF:
            return INF
        return x + y

    def leq(self, x, y):
        return x <= y

    def scalar_closure(self, x):
        return self.one if x <= 0 else INF

    def nth_root(self, y, n):
        if n < 1:
            raise ValueError("root order must be a positive integer")
        if math.isinf(y):
            return y
        return _divide(y, n)


class BooleanSemiring(Semiring):
    name = "boolean"
    zero = False
    one = True
    top = True
    flags = frozenset({
        "idempotent", "commutative", "entire", "cancellative", "algebraically_closed",
        "stabilizing", "freshman_dream", "linearly_ordered", "has_top", "semifield",
    })

    def add(self, x, y):
        return x or y

    def mul(self, x, y):
        return x and y

    def leq(self, x, y):
        return (not x) or y

    def scalar_closure(self, x):
        return True

    def nth_root(self, y, n):
        if n < 1:
            raise ValueError("root order must be a positive integer")
        return y

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("zero has no inverse")
        return True

    def is_element(self, x):
        return isinstance(x, bool)

    def coerce(self, value):
        if isinstance(value, bool):
            return value
        if isinstance(value, (int, float)) and value in (0, 1):
            return bool(value)
        if isinstance(value, str) and value.strip().lower() in ("0", "1", "true", "false"):
            return value.strip().lower() in ("1", "true")
        raise ParseError(f"cannot read {value!r} as a Boolean")

    def format(self, x):
        return int(x)


class NonnegReal(_RealSemiring):
    """Nonnegative reals with + and *: positive but not idempotent.

    x* = 1 / (1 - x) for 0 <= x < 1.
    """

    name = "nonneg-real"
    zero = 0.0
    one = 1.0
    flags = frozenset({
        "commutative", "entire", "cancellative", "algebraically_closed",
        "linearly_ordered", "positive",
    })

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def leq(self, x, y):
        return x <= y

    def scalar_closure(self, x):
        if x < 1:
            return 1.0 / (1.0 - x)
        raise ClosureUndefined(f"x* diverges in nonneg-real for x = {x} >= 1")

    def nth_root(self, y, n):
        if n < 1:
            raise ValueError("root order must be a positive integer")
        return y ** (1.0 / n)

    def is_element(self, x):
        return _is_real(x) and 0 <= x < INF

    def interpolate(self, lo, hi, t):
        return min(max(lo + t * (hi - lo), lo), hi)


class ProductSemiring(Semiring):
    """Coordinate-wise product of semirings.

    With ``punctured=True`` the carrier is restricted to tuples with no zero
    coordinate plus the all-zero tuple; this is a semiring when every factor
    is entire.  Either way the order is only partial.
    """

    def __init__(self, *factors, punctured=False):
        if len(factors) < 1:
            raise ValueError("need at least one factor")
        if punctured and not all(f.has("entire") for f in factors):
            raise CapabilityMissing("punctured product requires entire factors")
        self.factors = tuple(factors)
        self.punctured = punctured
        self.name = ("punctured-" if punctured else "") + "x".join(f.name for f in factors)
        self.zero = tuple(f.zero for f in factors)
        self.one = tuple(f.one for f in factors)
        tops = tuple(f.top for f in factors)
        self.top = None if None in tops else tops
        shared = frozenset.intersection(*(f.flags for f in factors))
        flags = shared & {"idempotent", "commutative", "algebraically_closed",
                          "freshman_dream", "has_top", "positive"}
        if punctured and "entire" in shared:
            flags |= {"entire"} | (shared & {"cancellative"})
        if len(factors) == 1:
            flags |= shared
        self.flags = frozenset(flags)

    @property
    def key(self):
        return ("product", tuple(f.key for f in self.factors), self.punctured)

    def add(self, x, y):
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def mul(self, x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def leq(self, x, y):
        cs = [f.leq(a, b) for f, a, b in zip(self.factors, x, y)]
        if all(c is True for c in cs):
            return True
        rs = [f.leq(b, a) for f, a, b in zip(self.factors, x, y)]
        if all(c is True for c in rs):
            return False
        return None

    def scalar_closure(self, x):
        return tuple(f.scalar_closure(a) for f, a in zip(self.factors, x))

    def nth_root(self, y, n):
        return tuple(f.nth_root(a, n) for f, a in zip(self.factors, y))

    def is_element(self, x):
        if not isinstance(x, tuple) or len(x) != len(self.factors):
            return False
        if not all(f.is_element(a) for f, a in zip(self.factors, x)):
            return False
        if self.punctured and x != self.zero:
            return all(a != f.zero for f, a in zip(self.factors, x))
        return True

    def isclose(self, x, y, rtol=0.0):
        return all(f.isclose(a, b, rtol) for f, a, b in zip(self.factors, x, y))

    def coerce(self, value):
        return tuple(f.coerce(v) for f, v in zip(self.factors, value))

    def format(self, x):
        return [f.format(a) for f, a in zip(self.factors, x)]


class CountingSemiring(Semiring):
    """Proxy that counts ``add`` and ``mul`` calls on another instance."""

    def __init__(self, base):
        self.base = base
        self.adds = 0
        self.muls = 0

    @property
    def count(self):
        return self.adds + self.muls

    def reset(self):
        self.adds = self.muls = 0

    def add(self, x, y):
        self.adds += 1
        return self.base.add(x, y)

    def mul(self, x, y):
        self.muls += 1
        return self.base.mul(x, y)

    def __getattr__(self, attr):
        return getattr(self.base, attr)

    # explicit delegation: these are defined on Semiring so __getattr__ never fires
    name = property(lambda self: self.base.name)
    zero = property(lambda self: self.base.zero)
    one = property(lambda self: self.base.one)
    top = property(lambda self: self.base.top)
    flags = property(lambda self: self.base.flags)
    key = property(lambda self: self.base.key)

    def leq(self, x, y):
        return self.base.leq(x, y)

    def scalar_closure(self, x):
        return self.base.scalar_closure(x)

    def nth_root(self, y, n):
        return self.base.nth_root(y, n)

    def inv(self, x):
        return self.base.inv(x)

    def is_element(self, x):
        return self.base.is_element(x)

    def isclose(self, x, y, rtol=0.0):
        return self.base.isclose(x, y, rtol)

    def coerce(self, value):
        return self.base.coerce(value)

    def format(self, x):
        return self.base.format(x)

    def interpolate(self, lo, hi, t):
        return self.base.interpolate(lo, hi, t)

    def exact(self, x):
        return self.base.exact(x)

    def inexact(self, x):
        return self.base.inexact(x)


MAX_PLUS = MaxPlus()
MIN_PLUS = MinPlus()
MAX_MIN = MaxMin()
BOOLEAN = BooleanSemiring()
MAX_PLUS_HAT = MaxPlusHat()
NONNEG_REAL = NonnegReal()

INSTANCES = {s.name: s for s in (MAX_PLUS, MIN_PLUS, MAX_MIN, BOOLEAN, MAX_PLUS_HAT, NONNEG_REAL)}


def make_instance(name):
    """Look up a built-in semiring by key, e.g. ``make_instance("min-plus")``."""
    try:
        return INSTANCES[name]
    except KeyError:
        raise ValueError(
            f"unknown semiring {name!r}; choose from {', '.join(sorted(INSTANCES))}"
        ) from None

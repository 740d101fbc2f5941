"""Dense matrices over a semiring and the algorithms built on them.

The closure ``A* = E + A + A^2 + ...`` is computed by a generalized
Gauss-Jordan elimination (one pivot per node, ``O(n^3)`` semiring operations).
The same routine works for idempotent and merely positive semirings because
it never relies on ``x + x = x``.
"""
import math
from dataclasses import dataclass
from typing import Any, Optional

from .errors import (
    CapabilityMissing, ClosureDiverges, ClosureUndefined, DimensionMismatch, NoCycle,
)

# exhaustive cycle enumeration is exponential; beyond this size it is refused
CYCLE_ENUMERATION_LIMIT = 12


class Matrix:
    """Immutable ``m x n`` matrix bound to a semiring.

    ``A + B`` is the elementwise sum and ``A @ B`` the semiring product.
    """

    __slots__ = ("profile", "rows")

    def __init__(self, profile, rows, *, check=True):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("a matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        if check:
            for r in rows:
                for x in r:
                    profile.validate(x)
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, profile, m, n=None):
        n = m if n is None else n
        z = profile.zero
        return cls(profile, [[z] * n for _ in range(m)], check=False)

    @classmethod
    def identity(cls, profile, n):
        z, e = profile.zero, profile.one
        return cls(profile, [[e if i == j else z for j in range(n)] for i in range(n)],
                   check=False)

    @classmethod
    def column(cls, profile, values):
        return cls(profile, [[v] for v in values])

    @classmethod
    def parse(cls, profile, rows):
        """Build from raw values (text encodings allowed)."""
        return cls(profile, [[profile.parse(x) for x in r] for r in rows], check=False)

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    @property
    def n(self):
        m, n = self.shape
        if m != n:
            raise DimensionMismatch(f"expected a square matrix, got {m}x{n}")
        return n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def map(self, f, profile=None):
        return Matrix(profile or self.profile, [[f(x) for x in r] for r in self.rows],
                      check=False)

    def submatrix(self, rows, cols=None):
        cols = rows if cols is None else cols
        return Matrix(self.profile, [[self.rows[i][j] for j in cols] for i in rows],
                      check=False)

    def permuted(self, perm):
        """``P A P^T`` for the node order ``perm``."""
        return self.submatrix(perm, perm)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.profile == other.profile
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.profile, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(repr(x) for x in r) for r in self.rows)
        return f"Matrix<{self.profile.name}>[{body}]"

    def __add__(self, other):
        return mat_add(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __pow__(self, k):
        return mat_pow(self, k)

    def leq(self, other):
        """Elementwise order: ``True``, ``False`` or ``None`` (incomparable)."""
        _same_shape(self, other)
        S = self.profile
        pairs = list(zip(_flat(self), _flat(other)))
        if all(S.leq(a, b) is True for a, b in pairs):
            return True
        if all(S.leq(b, a) is True for a, b in pairs):
            return False
        return None

    def isclose(self, other, rtol=0.0):
        if self.shape != other.shape:
            return False
        S = self.profile
        return all(S.isclose(a, b, rtol) for a, b in zip(_flat(self), _flat(other)))

    @property
    def is_zero(self):
        z = self.profile.zero
        return all(x == z for x in _flat(self))


def _flat(A):
    for r in A.rows:
        yield from r


def _same_shape(A, B):
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes differ: {A.shape} vs {B.shape}")
    if A.profile != B.profile:
        raise ValueError(f"semirings differ: {A.profile.name} vs {B.profile.name}")


def mat_add(A, B):
    _same_shape(A, B)
    add = A.profile.add
    return Matrix(A.profile, [[add(a, b) for a, b in zip(ra, rb)]
                              for ra, rb in zip(A.rows, B.rows)], check=False)


def mat_mul(A, B):
    """``(AB)_ij = sum_k a_ik * b_kj``."""
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if A.profile != B.profile:
        raise ValueError(f"semirings differ: {A.profile.name} vs {B.profile.name}")
    S = A.profile
    add, mul, zero = S.add, S.mul, S.zero
    cols = [B.col(j) for j in range(B.shape[1])]
    out = []
    for row in A.rows:
        out_row = []
        for col in cols:
            acc = zero
            for a, b in zip(row, col):
                acc = add(acc, mul(a, b))
            out_row.append(acc)
        out.append(out_row)
    return Matrix(S, out, check=False)


def scalar_mul(c, A):
    mul = A.profile.mul
    return A.map(lambda x: mul(c, x))


def mat_pow(A, k):
    if k < 0:
        raise ValueError("negative matrix powers are not defined")
    P = Matrix.identity(A.profile, A.n)
    for _ in range(k):
        P = A @ P
    return P


def power_sum(A, k):
    """``E + A + ... + A^k``."""
    n = A.n
    acc = P = Matrix.identity(A.profile, n)
    for _ in range(k):
        P = A @ P
        acc = acc + P
    return acc


def closure_by_powers(A):
    """Truncated series ``E + A + ... + A^(n-1)``; equals ``A*`` for semi-definite A."""
    return power_sum(A, A.n - 1)


def closure(A):
    """Kleene closure ``A*`` by generalized Gauss-Jordan elimination.

    Each pivot ``k`` applies ``a_ij <- a_ij + a_ik (a_kk)* a_kj`` using the
    entries from before the pivot step, which yields ``A+ = A A*``; the
    closure is then ``E + A+``.

    Raises :class:`ClosureDiverges` when a pivot has no scalar closure and the
    truncated power series cannot be used instead.
    """
    S = A.profile
    n = A.n
    add, mul, zero = S.add, S.mul, S.zero
    a = [list(r) for r in A.rows]
    for k in range(n):
        try:
            s = S.scalar_closure(a[k][k])
        except ClosureUndefined:
            if S.idempotent and is_semi_definite(A):
                return closure_by_powers(A)
            cycle = find_divergent_cycle(A)
            where = f" along cycle {list(cycle)}" if cycle else ""
            raise ClosureDiverges(
                f"closure of this {n}x{n} {S.name} matrix diverges{where}", cycle) from None
        col = [a[i][k] for i in range(n)]
        row = [mul(s, x) for x in a[k]]
        for i in range(n):
            c = col[i]
            if c == zero:
                continue
            ai = a[i]
            for j in range(n):
                ai[j] = add(ai[j], mul(c, row[j]))
    one = S.one
    for i in range(n):
        a[i][i] = add(one, a[i][i])
    return Matrix(S, a, check=False)


def closure_plus(A):
    """``A+ = A A* = A + A^2 + ...``."""
    return A @ closure(A)


# -- definiteness ------------------------------------------------------------

def _closed_path_sums(A):
    n = A.n
    acc = P = A
    for _ in range(n - 1):
        P = P @ A
        acc = acc + P
    return [acc[i, i] for i in range(n)]


def is_semi_definite(A):
    """Every closed path has weight <= 1.

    Checked on the diagonal of ``A + A^2 + ... + A^n``: a longer closed path
    splits into closed paths of length at most ``n``.
    """
    S = A.profile
    S.require("idempotent")
    return all(S.leq(d, S.one) is True for d in _closed_path_sums(A))


def is_definite(A):
    """Every closed path has weight strictly below 1."""
    S = A.profile
    S.require("idempotent")
    return all(S.leq(d, S.one) is True and d != S.one for d in _closed_path_sums(A))


# -- graph structure -----------------------------------------------------------

def support(A):
    """Adjacency lists of the arcs ``i -> j`` with ``a_ij != 0``."""
    z = A.profile.zero
    return [[j for j, x in enumerate(r) if x != z] for r in A.rows]


def strongly_connected_components(adj):
    """Tarjan's algorithm, iterative.  Components come out sinks first."""
    n = len(adj)
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack, comps = [], []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(adj[v]):
                work[-1] = (v, pos + 1)
                w = adj[v][pos]
                if index[w] is None:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def is_irreducible(A):
    """Every node reaches every node by a path of length >= 1."""
    n = A.n
    if n == 1:
        return A[0, 0] != A.profile.zero
    return len(strongly_connected_components(support(A))) == 1


@dataclass(frozen=True)
class BlockStructure:
    """Node order making the matrix upper block triangular.

    ``blocks`` lists the strongly connected components, sources first;
    ``permutation`` is their concatenation.
    """

    permutation: tuple
    blocks: tuple

    @property
    def boundaries(self):
        out, pos = [], 0
        for b in self.blocks:
            out.append((pos, pos + len(b)))
            pos += len(b)
        return tuple(out)


def scc_blocks(A):
    comps = strongly_connected_components(support(A))
    blocks = tuple(tuple(c) for c in reversed(comps))
    perm = tuple(i for b in blocks for i in b)
    return BlockStructure(perm, blocks)


def elementary_cycles(A, limit=CYCLE_ENUMERATION_LIMIT):
    """Yield every elementary cycle as a node tuple starting at its least node."""
    n = A.n
    if limit is not None and n > limit:
        raise CapabilityMissing(f"cycle enumeration refused for n = {n} > {limit}")
    adj = support(A)
    for s in range(n):
        path = [s]
        on_path = {s}
        iters = [iter(adj[s])]
        while iters:
            for w in iters[-1]:
                if w == s:
                    yield tuple(path)
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    iters.append(iter(adj[w]))
                    break
            else:
                iters.pop()
                on_path.discard(path.pop())


def cycle_weight(A, cycle):
    S = A.profile
    k = len(cycle)
    return S.prod(A[cycle[i], cycle[(i + 1) % k]] for i in range(k))


def find_divergent_cycle(A, budget=100_000):
    """An elementary cycle with weight not below 1, or ``None``.

    Searches at most ``budget`` cycles; for non-idempotent semirings divergence
    is not witnessed by single cycles and the search usually finds nothing.
    """
    S = A.profile
    try:
        for count, c in enumerate(elementary_cycles(A, limit=None)):
            if count >= budget:
                break
            if S.leq(cycle_weight(A, c), S.one) is not True:
                return c
    except CapabilityMissing:
        pass
    return None


# -- spectral theory -------------------------------------------------------------

@dataclass(frozen=True)
class EigenResult:
    eigenvalue: Any
    eigenvector: Optional[Matrix]
    unique: bool


EIGEN_FLAGS = ("idempotent", "commutative", "algebraically_closed", "cancellative",
               "stabilizing")


def cycle_eigenvalue(A, limit=CYCLE_ENUMERATION_LIMIT):
    """Sum over elementary cycles of the ``l``-th root of the cycle weight.

    For max-plus this is the maximum cycle mean.
    """
    S = A.profile
    lam = S.zero
    for c in elementary_cycles(A, limit):
        lam = S.add(lam, S.nth_root(cycle_weight(A, c), len(c)))
    return lam


def karp_eigenvalue(A):
    """Karp's formula over a linearly ordered algebraically closed semifield.

    With ``D_k(v)`` the best weight of a length-``k`` walk ending at ``v``
    (``D_0 = 1``), the value is the sum over ``v`` of the meet over ``k < n``
    of the ``(n-k)``-th root of ``D_n(v) / D_k(v)``.  ``O(n^3)`` on dense input.
    """
    S = A.profile
    S.require("semifield", "linearly_ordered", "algebraically_closed")
    n = A.n
    add, mul, zero = S.add, S.mul, S.zero
    D = [[S.one] * n]
    for _ in range(n):
        prev = D[-1]
        cur = []
        for v in range(n):
            acc = zero
            for u in range(n):
                acc = add(acc, mul(prev[u], A.rows[u][v]))
            cur.append(acc)
        D.append(cur)
    lam = zero
    for v in range(n):
        if D[n][v] == zero:
            continue
        best = None
        for k in range(n):
            if D[k][v] == zero:
                continue
            r = S.nth_root(mul(D[n][v], S.inv(D[k][v])), n - k)
            best = r if best is None else S.meet(best, r)
        lam = add(lam, best)
    return lam


def max_cycle_mean(A):
    """Maximum cycle mean of a max-plus matrix via Karp (``-inf`` if acyclic)."""
    if A.profile.name != "max-plus":
        raise CapabilityMissing("max_cycle_mean is defined for max-plus matrices")
    return karp_eigenvalue(A)


def _has_cycle(A):
    comps = strongly_connected_components(support(A))
    z = A.profile.zero
    return any(len(c) > 1 or A[c[0], c[0]] != z for c in comps)


def _exact_copy(A):
    S = A.profile
    # the infinities are floats too but need no conversion
    if any(isinstance(x, float) and math.isfinite(x) for x in _flat(A)):
        return A.map(S.exact), S.inexact
    return A, None


def eigenvalue(A, method="auto"):
    """Eigenvalue (and, over semifields, an eigenvector) of a square matrix.

    ``method`` is ``"karp"``, ``"cycles"`` (exhaustive elementary cycles) or
    ``"auto"``, which prefers Karp where the semiring supports it.  Finite
    float entries of real semifields are converted to exact fractions
    internally and the results rounded back to float; pass ints or
    ``Fraction`` values to get ``A V = lambda V`` exactly.

    The eigenvector is the first column ``j`` of ``(A / lambda)+`` whose
    diagonal entry is 1.  Raises :class:`NoCycle` for matrices without cycles.
    """
    S = A.profile
    S.require(*EIGEN_FLAGS)
    n = A.n
    if not _has_cycle(A):
        raise NoCycle("matrix has no cycle; no eigenvalue is determined")
    irreducible = is_irreducible(A)
    if method == "auto":
        method = "karp" if S.has("semifield", "linearly_ordered") else "cycles"
    if method not in ("karp", "cycles"):
        raise ValueError(f"unknown method {method!r}")

    work, restore = (_exact_copy(A) if S.has("semifield") else (A, None))
    lam = karp_eigenvalue(work) if method == "karp" else cycle_eigenvalue(work)

    vector = None
    if S.has("semifield"):
        scaled = scalar_mul(S.inv(lam), work)
        plus = closure_plus(scaled)
        crit = next(j for j in range(n) if plus[j, j] == S.one)
        vector = Matrix(S, [[x] for x in plus.col(crit)], check=False)
    if restore is not None:
        lam = restore(lam)
        if vector is not None:
            vector = vector.map(restore)
    return EigenResult(lam, vector, irreducible)


def spectral_radius(A):
    """Sum of the eigenvalues of the irreducible diagonal blocks.

    Zero diagonal blocks contribute zero.  For an interval matrix the upper
    matrix is used.
    """
    from .interval import IntervalSemiring, split

    if isinstance(A.profile, IntervalSemiring):
        A = split(A)[1]
    S = A.profile
    S.require(*EIGEN_FLAGS)
    rho = S.zero
    for block in scc_blocks(A).blocks:
        sub = A.submatrix(block)
        if not is_irreducible(sub):
            continue
        rho = S.add(rho, eigenvalue(sub).eigenvalue)
    return rho

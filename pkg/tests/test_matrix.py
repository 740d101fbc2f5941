import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

import oracles
from idempotent import (
    BOOLEAN, MAX_MIN, MAX_PLUS, MIN_PLUS, NONNEG_REAL, Matrix, closure, closure_by_powers,
    eigenvalue, is_definite, is_irreducible, is_semi_definite, karp_eigenvalue, mat_pow,
    max_cycle_mean, scc_blocks, spectral_radius,
)
from idempotent.errors import (
    CapabilityMissing, ClosureDiverges, DimensionMismatch, NoCycle,
)
from idempotent.generate import random_matrix, random_semidefinite
from idempotent.matrix import elementary_cycles, find_divergent_cycle, power_sum, scalar_mul

INF = math.inf
NINF = -math.inf


def M(S, rows):
    return Matrix(S, rows)


def test_add_example():
    assert M(MAX_PLUS, [[1, 2], [3, 4]]) + M(MAX_PLUS, [[4, 3], [2, 1]]) == M(MAX_PLUS, [[4, 3], [3, 4]])


def test_add_zero_and_idempotent():
    A = M(MAX_PLUS, [[1, NINF], [3, 4]])
    assert A + Matrix.zeros(MAX_PLUS, 2) == A
    assert A + A == A


def test_mul_example():
    A = M(MAX_PLUS, [[0, 1], [NINF, 0]])
    B = M(MAX_PLUS, [[0, NINF], [2, 0]])
    assert A @ B == M(MAX_PLUS, [[3, 1], [2, 0]])


def test_identity_is_unit():
    A = M(MIN_PLUS, [[1, INF, 2], [0, 5, INF], [INF, INF, 3]])
    E = Matrix.identity(MIN_PLUS, 3)
    assert E @ A == A and A @ E == A


def test_boolean_mul_is_relation_composition():
    rng = np.random.default_rng(3)
    for _ in range(20):
        R = rng.random((4, 4)) < 0.4
        T = rng.random((4, 4)) < 0.4
        rel_r = {(i, j) for i in range(4) for j in range(4) if R[i, j]}
        rel_t = {(i, j) for i in range(4) for j in range(4) if T[i, j]}
        comp = {(i, k) for (i, j) in rel_r for (j2, k) in rel_t if j == j2}
        P = M(BOOLEAN, R.tolist()) @ M(BOOLEAN, T.tolist())
        assert {(i, j) for i in range(4) for j in range(4) if P[i, j]} == comp


def test_matmul_matches_plain_max_plus():
    rng = np.random.default_rng(0)
    for _ in range(20):
        A = random_matrix(MAX_PLUS, 3, 4, rng)
        B = random_matrix(MAX_PLUS, 4, 2, rng)
        assert (A @ B).tolist() == oracles.maxplus_matmul(A.tolist(), B.tolist())


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        M(MAX_PLUS, [[1, 2]]) @ M(MAX_PLUS, [[1, 2]])
    with pytest.raises(DimensionMismatch):
        M(MAX_PLUS, [[1, 2]]) + M(MAX_PLUS, [[1], [2]])
    with pytest.raises(ValueError):
        M(MAX_PLUS, [[1, 2], [3]])


def test_matrix_rejects_invalid_elements():
    with pytest.raises(ValueError):
        M(NONNEG_REAL, [[-1.0]])


def test_closure_min_plus_example():
    assert closure(M(MIN_PLUS, [[INF, 1], [2, INF]])) == M(MIN_PLUS, [[0, 1], [2, 0]])


def test_closure_boolean_example():
    A = M(BOOLEAN, [[False, True], [False, False]])
    assert closure(A) == M(BOOLEAN, [[True, True], [False, True]])


def test_closure_diverges_on_positive_cycle():
    A = M(MAX_PLUS, [[NINF, 1], [2, NINF]])
    with pytest.raises(ClosureDiverges) as info:
        closure(A)
    assert info.value.cycle is not None
    assert sorted(info.value.cycle) == [0, 1]


def test_closure_negative_cycle_min_plus():
    with pytest.raises(ClosureDiverges):
        closure(M(MIN_PLUS, [[INF, 1], [-3, INF]]))


@pytest.mark.parametrize("S, ops", [(MAX_PLUS, oracles.MAXPLUS), (MIN_PLUS, oracles.MINPLUS)])
def test_closure_equals_walk_enumeration(S, ops):
    rng = np.random.default_rng(11)
    for n in (1, 2, 3, 4):
        for _ in range(10):
            A = random_semidefinite(S, n, rng)
            assert closure(A).tolist() == oracles.path_sum(A.tolist(), ops, n - 1)


def test_closure_max_min_and_boolean_against_walks():
    rng = np.random.default_rng(12)
    for n in (2, 3, 4):
        for _ in range(10):
            A = random_matrix(MAX_MIN, n, n, rng)
            assert closure(A).tolist() == oracles.path_sum(A.tolist(), oracles.MAXMIN, n - 1)
            Bm = random_matrix(BOOLEAN, n, n, rng)
            assert closure(Bm).tolist() == oracles.path_sum(Bm.tolist(), oracles.BOOL, n - 1)


def test_closure_fixed_point_equation():
    rng = np.random.default_rng(5)
    for _ in range(20):
        A = random_semidefinite(MAX_PLUS, 5, rng)
        S = closure(A)
        assert S == A @ S + Matrix.identity(MAX_PLUS, 5)
        assert S == S @ A + Matrix.identity(MAX_PLUS, 5)


def test_closure_nonneg_real_matches_inverse_and_series():
    rng = np.random.default_rng(9)
    for n in (1, 2, 4):
        raw = rng.uniform(0, 1, size=(n, n))
        raw *= 0.9 / raw.sum(axis=1, keepdims=True)
        A = M(NONNEG_REAL, raw.tolist())
        got = np.array(closure(A).tolist())
        np.testing.assert_allclose(got, np.linalg.inv(np.eye(n) - raw), rtol=1e-12)
        series = sum(np.linalg.matrix_power(raw, k) for k in range(400))
        np.testing.assert_allclose(got, series, rtol=1e-9)


def test_closure_by_powers_matches_elimination():
    rng = np.random.default_rng(6)
    for S in (MAX_PLUS, MIN_PLUS):
        for n in range(2, 7):
            A = random_semidefinite(S, n, rng)
            assert closure_by_powers(A) == closure(A)


def test_carre_truncation_stops_growing():
    rng = np.random.default_rng(8)
    for n in range(2, 7):
        A = random_semidefinite(MAX_PLUS, n, rng)
        assert power_sum(A, n - 1) == power_sum(A, n + 2)


def test_definiteness_examples():
    assert is_definite(M(MAX_PLUS, [[-1, NINF], [NINF, -2]]))
    assert is_semi_definite(M(MIN_PLUS, [[INF, 1], [2, INF]]))
    loop = M(MAX_PLUS, [[0, NINF], [NINF, -1]])
    assert is_semi_definite(loop) and not is_definite(loop)
    assert not is_semi_definite(M(MAX_PLUS, [[NINF, 1], [2, NINF]]))


def test_definiteness_requires_idempotent():
    with pytest.raises(CapabilityMissing):
        is_semi_definite(M(NONNEG_REAL, [[0.1]]))


def test_semi_definite_agrees_with_cycle_enumeration():
    rng = np.random.default_rng(4)
    for _ in range(60):
        A = random_matrix(MAX_PLUS, 4, 4, rng, density=0.5)
        rows = A.tolist()
        expected = all(
            sum(rows[a][b] for a, b in zip(c + (c[0],), (c + (c[0],))[1:])) <= 0
            for c in oracles.elementary_cycles(rows, NINF))
        assert is_semi_definite(A) == expected


def test_irreducible_examples():
    assert is_irreducible(M(MAX_PLUS, [[NINF, 1], [2, NINF]]))
    assert not is_irreducible(M(MAX_PLUS, [[NINF, 1], [NINF, NINF]]))
    for n in (2, 3, 5):
        assert not is_irreducible(Matrix.identity(MAX_PLUS, n))


def test_scc_blocks_examples():
    A = M(MAX_PLUS, [[0, 1], [3, 0]])
    assert scc_blocks(A).blocks == ((0, 1),)
    T = M(MAX_PLUS, [[1, 5], [NINF, 2]])
    st = scc_blocks(T)
    assert st.blocks == ((0,), (1,))
    assert st.permutation == (0, 1)


def _dag_of_sccs(rng):
    """Six nodes in three 2-cycles, linked forward only, then shuffled."""
    n = 6
    rows = [[NINF] * n for _ in range(n)]
    groups = [(0, 1), (2, 3), (4, 5)]
    for a, b in groups:
        rows[a][b], rows[b][a] = 1.0, 1.0
    rows[1][2] = rows[3][4] = 1.0
    if rng.random() < 0.5:
        rows[0][5] = 1.0
    perm = rng.permutation(n)
    shuffled = [[rows[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    return shuffled


def test_scc_blocks_against_reachability():
    rng = np.random.default_rng(21)
    for _ in range(20):
        rows = _dag_of_sccs(rng)
        A = M(MAX_PLUS, rows)
        st = scc_blocks(A)
        R = oracles.reachability(rows, NINF)
        assert len(st.blocks) == 3
        for b in st.blocks:
            assert all(R[i][j] and R[j][i] for i in b for j in b)
        pos = {v: k for k, b in enumerate(st.blocks) for v in b}
        # upper block triangular: arcs never go from a later block to an earlier one
        for i in range(6):
            for j in range(6):
                if rows[i][j] != NINF:
                    assert pos[i] <= pos[j]
        P = A.permuted(st.permutation)
        for (s0, e0) in st.boundaries:
            for i in range(s0, e0):
                assert all(P[i, j] == NINF for j in range(0, s0))


def test_scc_blocks_random_against_reachability():
    rng = np.random.default_rng(22)
    for _ in range(50):
        A = random_matrix(MAX_PLUS, 7, 7, rng, density=0.2)
        rows = A.tolist()
        R = oracles.reachability(rows, NINF)
        st = scc_blocks(A)
        classes = {frozenset(j for j in range(7) if R[i][j] and R[j][i]) for i in range(7)}
        assert {frozenset(b) for b in st.blocks} == classes


def test_elementary_cycles_match_oracle():
    rng = np.random.default_rng(2)
    for _ in range(20):
        A = random_matrix(MAX_PLUS, 5, 5, rng, density=0.5)
        ours = {_canon(c) for c in elementary_cycles(A)}
        ref = set(oracles.elementary_cycles(A.tolist(), NINF))
        assert ours == ref


def _canon(c):
    k = c.index(min(c))
    return tuple(c[k:]) + tuple(c[:k])


def test_eigenvalue_examples():
    r = eigenvalue(M(MAX_PLUS, [[1, 3], [2, 1]]))
    assert r.eigenvalue == 2.5 and r.unique
    r = eigenvalue(M(MAX_PLUS, [[4.25]]))
    assert r.eigenvalue == 4.25
    assert r.eigenvector == M(MAX_PLUS, [[0]])
    r = eigenvalue(M(BOOLEAN, [[False, True], [True, False]]))
    assert r.eigenvalue is True


def test_eigenvalue_no_cycle():
    with pytest.raises(NoCycle):
        eigenvalue(M(MAX_PLUS, [[NINF, 1], [NINF, NINF]]))


def test_eigenvalue_requires_flags():
    with pytest.raises(CapabilityMissing):
        eigenvalue(M(MAX_MIN, [[1.0]]))


def test_eigen_equation_exact_with_fractions():
    rng = np.random.default_rng(17)
    for _ in range(30):
        n = int(rng.integers(1, 7))
        rows = [[Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 5))) for _ in range(n)]
                for _ in range(n)]
        A = M(MAX_PLUS, rows)
        r = eigenvalue(A)
        assert r.eigenvalue == oracles.max_cycle_mean(rows)
        V = r.eigenvector
        assert A @ V == scalar_mul(r.eigenvalue, V)


def test_karp_matches_cycle_enumeration_min_plus():
    rng = np.random.default_rng(18)
    for _ in range(30):
        A = random_matrix(MIN_PLUS, 5, 5, rng, density=0.6)
        rows = A.tolist()
        cycles = list(oracles.elementary_cycles(rows, INF))
        if not cycles:
            continue
        best = min(sum(Fraction(rows[a][b]) for a, b in zip(c + (c[0],), (c + (c[0],))[1:]))
                   / len(c) for c in cycles)
        assert karp_eigenvalue(A.map(MIN_PLUS.exact)) == best


def test_max_cycle_mean_only_for_max_plus():
    assert max_cycle_mean(M(MAX_PLUS, [[1, 3], [2, 1]])) == 2.5
    with pytest.raises(CapabilityMissing):
        max_cycle_mean(M(MIN_PLUS, [[1]]))


def test_spectral_radius_examples():
    assert spectral_radius(M(MAX_PLUS, [[1, NINF], [NINF, -3]])) == 1
    assert spectral_radius(M(MAX_PLUS, [[NINF, 5, 2], [NINF, NINF, 1], [NINF, NINF, NINF]])) == NINF
    assert spectral_radius(M(MAX_PLUS, [[1, 3], [2, 1]])) == 2.5


def test_spectral_radius_is_max_cycle_mean():
    rng = np.random.default_rng(19)
    for _ in range(40):
        A = random_matrix(MAX_PLUS, 5, 5, rng, density=0.3)
        assert spectral_radius(A) == pytest.approx(oracles.max_cycle_mean(A.tolist()), abs=1e-12)


def test_find_divergent_cycle_weight_positive():
    A = M(MAX_PLUS, [[-1, 2, NINF], [NINF, NINF, 1], [-2, NINF, NINF]])
    c = find_divergent_cycle(A)
    assert c is not None
    cyc = list(c) + [c[0]]
    assert sum(A[a, b] for a, b in zip(cyc, cyc[1:])) > 0


def test_mat_pow_zero_is_identity():
    A = M(MAX_PLUS, [[1, 2], [3, 4]])
    assert mat_pow(A, 0) == Matrix.identity(MAX_PLUS, 2)
    assert mat_pow(A, 3) == A @ A @ A


def test_matrix_immutable_and_hashable():
    A = M(MAX_PLUS, [[1]])
    with pytest.raises(AttributeError):
        A.rows = ()
    assert hash(A) == hash(M(MAX_PLUS, [[1]]))


def test_walk_enumeration_all_lengths_agree_for_small():
    # sanity on the oracle itself: a 2-cycle of weight 0 adds nothing past n - 1
    rows = [[NINF, 1.0], [-1.0, NINF]]
    assert oracles.path_sum(rows, oracles.MAXPLUS, 1) == oracles.path_sum(rows, oracles.MAXPLUS, 5)
    assert list(itertools.islice(oracles.walks(2, 0, 1, 1), 5)) == [(0, 1)]


def test_eigen_stays_exact_for_integers_with_missing_arcs():
    # -inf is a float; it must not push integer input onto the rounded float path
    A = M(MAX_PLUS, [[NINF, 3, NINF], [NINF, NINF, 1], [-1, NINF, 0]])
    r = eigenvalue(A)
    assert r.eigenvalue == Fraction(1)
    assert all(not isinstance(x, float) or x == NINF for x in r.eigenvector.col(0))
    assert A @ r.eigenvector == scalar_mul(r.eigenvalue, r.eigenvector)

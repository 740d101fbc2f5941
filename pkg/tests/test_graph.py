import math
import warnings

import numpy as np
import pytest

import oracles
from idempotent import (
    BOOLEAN, MAX_MIN, MAX_PLUS, MIN_PLUS, NONNEG_REAL, Matrix, WeightedDigraph, algebraic_path,
    best_profit, graph_to_matrix, matrix_to_graph, max_width_paths, path_weight, shortest_paths,
)
from idempotent.errors import ClosureDiverges, NotAPath
from idempotent.generate import random_matrix
from idempotent.matrix import mat_pow

INF, NINF = math.inf, -math.inf


def g(S, nodes, arcs):
    return WeightedDigraph.from_arcs(S, nodes, arcs)


def test_empty_graph_is_zero_matrix():
    assert graph_to_matrix(g(MAX_PLUS, "abc", [])) == Matrix.zeros(MAX_PLUS, 3)


def test_single_arc():
    A = graph_to_matrix(g(MIN_PLUS, ["1", "2"], [("1", "2", 4)]))
    assert A == Matrix(MIN_PLUS, [[INF, 4], [INF, INF]])


def test_roundtrip_random():
    rng = np.random.default_rng(0)
    for _ in range(20):
        A = random_matrix(MAX_PLUS, 5, 5, rng, density=0.4)
        G = matrix_to_graph(A)
        assert graph_to_matrix(G) == A
        assert matrix_to_graph(graph_to_matrix(G)) == G


def test_parallel_arcs_merge_with_warning():
    with pytest.warns(UserWarning):
        G = g(MIN_PLUS, "ab", [("a", "b", 5), ("a", "b", 3)])
    assert G.arcs[(0, 1)] == 3


def test_bad_arcs_rejected():
    with pytest.raises(ValueError):
        g(MIN_PLUS, "ab", [("a", "c", 1)])
    with pytest.raises(ValueError):
        g(MIN_PLUS, "ab", [("a", "b", "inf")])
    with pytest.raises(ValueError):
        g(MIN_PLUS, "aa", [])


def test_path_weight_examples():
    G = g(MIN_PLUS, "123", [("1", "2", 1), ("2", "3", 2)])
    assert path_weight(G, ["1", "2", "3"]) == 3
    assert path_weight(G, ["2"]) == 0
    W = g(MAX_MIN, "1234", [("1", "2", 5), ("2", "3", 2), ("3", "4", 7)])
    assert path_weight(W, ["1", "2", "3", "4"]) == 2
    with pytest.raises(NotAPath):
        path_weight(G, ["3", "1"])


def test_shortest_paths_examples():
    G = g(MIN_PLUS, ["1", "2"], [("1", "2", 1), ("2", "1", 2)])
    assert shortest_paths(G) == Matrix(MIN_PLUS, [[0, 1], [2, 0]])
    H = g(MIN_PLUS, ["1", "2"], [])
    assert shortest_paths(H)[0, 1] == INF


def test_shortest_paths_negative_cycle_labels():
    G = g(MIN_PLUS, ["x", "y", "z"], [("x", "y", 1), ("y", "x", -3), ("y", "z", 1)])
    with pytest.raises(ClosureDiverges) as info:
        shortest_paths(G)
    assert set(info.value.cycle) == {"x", "y"}


def test_shortest_paths_against_simple_path_enumeration():
    rng = np.random.default_rng(1)
    for _ in range(30):
        rows = [[float(rng.integers(0, 10)) if rng.random() < 0.5 else INF for _ in range(5)]
                for _ in range(5)]
        D = shortest_paths(matrix_to_graph(Matrix(MIN_PLUS, rows)))
        for i in range(5):
            for j in range(5):
                if i == j:
                    assert D[i, j] == 0
                    continue
                best = min((sum(rows[a][b] for a, b in zip(p, p[1:]))
                            for p in oracles.simple_paths(rows, INF, i, j)), default=INF)
                assert D[i, j] == best


def test_widest_paths_examples():
    G = g(MAX_MIN, ["1", "2", "3"], [("1", "3", 3), ("3", "2", 7), ("1", "2", 5)])
    W = max_width_paths(G)
    assert W[0, 1] == 5
    assert all(W[i, i] == INF for i in range(3))
    assert W[1, 0] == NINF


def test_widest_paths_against_simple_path_enumeration():
    rng = np.random.default_rng(2)
    for _ in range(30):
        rows = [[float(rng.integers(1, 10)) if rng.random() < 0.5 else NINF for _ in range(5)]
                for _ in range(5)]
        W = max_width_paths(matrix_to_graph(Matrix(MAX_MIN, rows)))
        for i in range(5):
            for j in range(5):
                if i == j:
                    assert W[i, j] == INF
                    continue
                best = max((min(rows[a][b] for a, b in zip(p, p[1:]))
                            for p in oracles.simple_paths(rows, NINF, i, j)), default=NINF)
                assert W[i, j] == best


def test_profit_horizon_zero_is_terminal():
    G = g(MAX_PLUS, "abc", [("a", "b", 1)])
    assert best_profit(G, [1, 2, 3], horizon=0).tolist() == [[1], [2], [3]]


def test_profit_chain_two_steps():
    G = g(MAX_PLUS, "abc", [("a", "b", 2), ("b", "c", -1), ("a", "c", 4), ("c", "c", 0),
                            ("b", "b", 1)])
    terminal = [0, 5, 1]
    got = best_profit(G, terminal, horizon=2).tolist()
    rows = graph_to_matrix(G).tolist()
    for i in range(3):
        best = max((rows[i][k] + rows[k][j] + terminal[j]
                    for k in range(3) for j in range(3)), default=NINF)
        assert got[i][0] == best
    assert got[0][0] == 8  # a -> b -> b, then exit at b


def test_profit_horizon_matches_power():
    rng = np.random.default_rng(3)
    A = random_matrix(MAX_PLUS, 4, 4, rng)
    G = matrix_to_graph(A)
    for k in range(4):
        got = best_profit(G, [0, 1, 2, 3], horizon=k).tolist()
        assert [r[0] for r in got] == oracles.maxplus_matvec(mat_pow(A, k).tolist(), [0, 1, 2, 3])


def test_profit_unbounded_positive_loop():
    G = g(MAX_PLUS, "ab", [("a", "a", 1), ("a", "b", 0)])
    with pytest.raises(ClosureDiverges) as info:
        best_profit(G, [0, 0])
    assert info.value.cycle == ["a"]


def test_profit_unbounded_matches_closure():
    G = g(MAX_PLUS, "abc", [("a", "b", 2), ("b", "a", -3), ("b", "c", 1)])
    got = [r[0] for r in best_profit(G, [0, 0, 10]).tolist()]
    assert got == [13, 11, 10]


def test_generic_boolean_reachability():
    G = g(BOOLEAN, "abc", [("a", "b", 1), ("b", "c", 1)])
    R = algebraic_path(G)
    assert R.tolist() == [[True, True, True], [False, True, True], [False, False, True]]


def test_generic_min_plus_equals_shortest():
    G = g(MIN_PLUS, "abcd", [("a", "b", 1), ("b", "c", 2), ("a", "c", 5), ("c", "d", 1)])
    assert algebraic_path(G) == shortest_paths(G)


def test_generic_nonneg_real_against_truncated_series():
    rng = np.random.default_rng(4)
    raw = rng.uniform(0, 1, size=(4, 4))
    raw[rng.random((4, 4)) < 0.3] = 0.0
    # row sums <= 1/2 make the tail beyond A^60 negligible
    raw *= 0.5 / max(raw.sum(axis=1).max(), 1e-9)
    G = matrix_to_graph(Matrix(NONNEG_REAL, raw.tolist()))
    got = np.array(algebraic_path(G).tolist())
    series = sum(np.linalg.matrix_power(raw, k) for k in range(61))
    np.testing.assert_allclose(got, series, rtol=1e-9)


def test_rebind_changes_semiring():
    G = g(MAX_PLUS, "ab", [("a", "b", 3)])
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        H = G.rebind(MIN_PLUS)
    assert H.profile == MIN_PLUS and H.arcs == G.arcs


def test_rebind_to_boolean_keeps_pattern():
    G = g(MIN_PLUS, "abc", [("a", "b", 4), ("b", "c", -2)])
    R = algebraic_path(G, BOOLEAN)
    assert R.tolist() == [[True, True, True], [False, True, True], [False, False, True]]

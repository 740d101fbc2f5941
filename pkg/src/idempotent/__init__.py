"""Semiring matrices: closure, eigenvalues, interval bounds and ``X = A X + B``."""
from .bellman import (
    BellmanProblem, IterationTrace, UnitedCheckReport, iterate, sample_united_check,
    solve_interval, solve_point, spectral_criterion,
)
from .errors import (
    CapabilityMissing, ClosureDiverges, ClosureUndefined, DimensionMismatch, InvalidBounds,
    MaxIterationsExceeded, NoCycle, NotAPath, ParseError, RootUndefined, SemiringError,
    StrongViolation,
)
from .graph import (
    WeightedDigraph, algebraic_path, best_profit, graph_to_matrix, matrix_to_graph,
    max_width_paths, path_weight, shortest_paths,
)
from .interval import (
    Interval, IntervalSemiring, degenerate, extension, iadd, icontains, imul, interval_closure,
    interval_matrix, interval_new, interval_nth_root, isubset, merge, split,
)
from .matrix import (
    EigenResult, Matrix, closure, closure_by_powers, eigenvalue, is_definite, is_irreducible,
    is_semi_definite, karp_eigenvalue, mat_add, mat_mul, mat_pow, max_cycle_mean, scc_blocks,
    spectral_radius,
)
from .semiring import (
    BOOLEAN, INSTANCES, MAX_MIN, MAX_PLUS, MAX_PLUS_HAT, MIN_PLUS, NONNEG_REAL, CountingSemiring,
    ProductSemiring, Semiring, make_instance,
)

__version__ = "0.1.0"

"""Weighted digraphs and the optimization problems solved by matrix closure.

A square matrix over a semiring and a weighted digraph on the same nodes are
two views of one object: arc ``i -> j`` exists iff ``a_ij != 0``.  Shortest
paths (min-plus), widest paths (max-min) and best accumulated profit
(max-plus) are all the closure ``A*`` read in a different semiring.
"""
import warnings
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from .errors import ClosureDiverges, NotAPath
from .matrix import Matrix, closure, find_divergent_cycle, is_semi_definite, mat_pow
from .semiring import MAX_MIN, MAX_PLUS, MIN_PLUS, BooleanSemiring


@dataclass(frozen=True)
class WeightedDigraph:
    profile: Any
    nodes: Tuple[str, ...]
    arcs: Dict[Tuple[int, int], Any]

    @classmethod
    def from_arcs(cls, profile, nodes, arcs):
        """Build from ``(source, target, weight)`` triples keyed by node label.

        Parallel arcs are merged with the semiring sum (with a warning); arcs
        of weight zero are rejected since they do not exist in the matrix view.
        """
        nodes = tuple(str(v) for v in nodes)
        if len(set(nodes)) != len(nodes):
            raise ValueError("duplicate node labels")
        pos = {v: i for i, v in enumerate(nodes)}
        merged = {}
        for src, dst, w in arcs:
            try:
                key = (pos[str(src)], pos[str(dst)])
            except KeyError as exc:
                raise ValueError(f"arc endpoint {exc.args[0]!r} is not a node") from None
            w = profile.parse(w)
            if w == profile.zero:
                raise ValueError(f"arc {src}->{dst} has zero weight")
            if key in merged:
                warnings.warn(f"parallel arcs {src}->{dst} merged", stacklevel=2)
                w = profile.add(merged[key], w)
            merged[key] = w
        return cls(profile, nodes, merged)

    @property
    def n(self):
        return len(self.nodes)

    def index(self, label):
        try:
            return self.nodes.index(str(label))
        except ValueError:
            raise KeyError(label) from None

    def rebind(self, profile):
        """Same arcs read as elements of another semiring.

        Reading into the Boolean semiring keeps only the arc pattern.
        """
        if profile == self.profile:
            return self
        if isinstance(profile, BooleanSemiring):
            arcs = dict.fromkeys(self.arcs, True)
        else:
            arcs = {k: profile.parse(w) for k, w in self.arcs.items()}
        return WeightedDigraph(profile, self.nodes, arcs)


def graph_to_matrix(g):
    z = g.profile.zero
    rows = [[g.arcs.get((i, j), z) for j in range(g.n)] for i in range(g.n)]
    return Matrix(g.profile, rows, check=False)


def matrix_to_graph(A, nodes=None):
    n = A.n
    nodes = tuple(str(v) for v in nodes) if nodes is not None else tuple(
        str(i + 1) for i in range(n))
    z = A.profile.zero
    arcs = {(i, j): A[i, j] for i in range(n) for j in range(n) if A[i, j] != z}
    return WeightedDigraph(A.profile, nodes, arcs)


def path_weight(g, path):
    """Product of arc weights along ``path`` (node labels); 1 for a single node."""
    S = g.profile
    idx = [g.index(v) for v in path]
    if not idx:
        raise NotAPath("a path has at least one node")
    w = S.one
    for a, b in zip(idx, idx[1:]):
        try:
            w = S.mul(w, g.arcs[(a, b)])
        except KeyError:
            raise NotAPath(f"no arc {g.nodes[a]} -> {g.nodes[b]}") from None
    return w


def _closure_with_diagnostics(A, nodes):
    try:
        return closure(A)
    except ClosureDiverges as exc:
        cycle = exc.cycle if exc.cycle is not None else find_divergent_cycle(A)
        if cycle is None:
            raise
        labels = [nodes[i] for i in cycle]
        raise ClosureDiverges(f"cycle through {labels} has weight above one", labels) from None


def algebraic_path(g, profile=None):
    """Entry ``(i, j)``: the sum of weights over all paths from i to j."""
    if profile is not None:
        g = g.rebind(profile)
    return _closure_with_diagnostics(graph_to_matrix(g), g.nodes)


def shortest_paths(g):
    """Shortest distances (min-plus closure); fails on a negative cycle."""
    return algebraic_path(g, MIN_PLUS)


def max_width_paths(g):
    """Bottleneck capacities (max-min closure); always defined."""
    return algebraic_path(g, MAX_MIN)


def best_profit(g, terminal, horizon=None):
    """Best transition profit plus exit profit, starting from each node.

    ``terminal`` is an n x 1 max-plus matrix (or a sequence of values).  With
    an integer ``horizon`` k the paths have exactly k steps (``A^k B``);
    with ``None`` the length is unrestricted (``A* B``), which requires that
    no cycle has positive total profit.
    """
    g = g.rebind(MAX_PLUS)
    A = graph_to_matrix(g)
    if not isinstance(terminal, Matrix):
        terminal = Matrix.column(MAX_PLUS, [MAX_PLUS.parse(v) for v in terminal])
    if horizon is not None:
        return mat_pow(A, horizon) @ terminal
    if not is_semi_definite(A):
        cycle = find_divergent_cycle(A)
        labels = [g.nodes[i] for i in cycle] if cycle else None
        raise ClosureDiverges(f"positive-profit cycle through {labels}", labels)
    return closure(A) @ terminal

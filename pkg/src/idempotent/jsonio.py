"""JSON encoding of elements, matrices, graphs and Bellman problems.

Scalars are JSON numbers except the infinities, written ``"-inf"`` and
``"inf"``; booleans are 0/1 and an interval element is ``[lo, hi]``.  Every
payload names its semiring by key.  Interval payloads may carry
``"mode": "weak" | "strong"`` (default weak).
"""
import json
from dataclasses import dataclass
from typing import Any, Optional

from .errors import ParseError
from .graph import WeightedDigraph
from .interval import IntervalSemiring, extension
from .matrix import Matrix
from .semiring import make_instance

KINDS = ("matrix", "interval-matrix", "graph", "bellman-problem")


@dataclass
class ProblemFile:
    """A decoded payload: ``kind`` plus whichever fields it carries."""

    kind: str
    semiring: Any
    A: Optional[Matrix] = None
    B: Optional[Matrix] = None
    graph: Optional[WeightedDigraph] = None
    terminal: Optional[list] = None

    @property
    def interval(self):
        return self.A is not None and isinstance(self.A.profile, IntervalSemiring)


def dumps(obj):
    """Deterministic JSON text (sorted keys, two-space indent)."""
    return json.dumps(obj, sort_keys=True, indent=2)


def _has_pairs(rows):
    return any(isinstance(x, (list, tuple)) for r in rows for x in r)


def _rows(obj, field):
    rows = obj.get(field)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"field {field!r} must be a list of rows")
    if rows and len({len(r) for r in rows}) != 1:
        raise ParseError(f"rows of {field!r} have different lengths")
    return rows


def _profile(base, mode, interval):
    if mode not in (None, "weak", "strong"):
        raise ParseError(f"mode must be 'weak' or 'strong', got {mode!r}")
    if not interval:
        return base
    return extension(base, mode == "strong")


def decode_matrix(profile, rows):
    """Matrix over ``profile`` from raw JSON rows."""
    return Matrix(profile, [[profile.parse(x) for x in r] for r in rows], check=False)


def encode_matrix(M):
    return [[M.profile.format(x) for x in r] for r in M.rows]


def encode_column(M):
    return [M.profile.format(r[0]) for r in M.rows]


def load(obj):
    """Decode a parsed JSON object into a :class:`ProblemFile`."""
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    key = obj.get("semiring")
    if not isinstance(key, str):
        raise ParseError("missing 'semiring' key")
    base = make_instance(key)
    mode = obj.get("mode")
    kind = obj.get("kind")
    if kind is None:
        kind = "graph" if "arcs" in obj else "bellman-problem" if "B" in obj else "matrix"
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")

    if kind == "graph":
        return _load_graph(obj, base, mode)
    if kind in ("matrix", "interval-matrix"):
        rows = _rows(obj, "matrix")
        interval = kind == "interval-matrix" or mode is not None or _has_pairs(rows)
        S = _profile(base, mode, interval)
        return ProblemFile("interval-matrix" if interval else "matrix", base,
                           A=decode_matrix(S, rows))
    A_rows, B_rows = _rows(obj, "A"), _rows(obj, "B")
    S = _profile(base, mode, mode is not None or _has_pairs(A_rows) or _has_pairs(B_rows))
    return ProblemFile(kind, base, A=decode_matrix(S, A_rows), B=decode_matrix(S, B_rows))


def _load_graph(obj, base, mode):
    if mode is not None:
        raise ParseError("graphs carry point weights only")
    nodes = obj.get("nodes")
    arcs = obj.get("arcs")
    if not isinstance(nodes, list) or not isinstance(arcs, list):
        raise ParseError("a graph needs 'nodes' and 'arcs' lists")
    triples = []
    for a in arcs:
        if not isinstance(a, dict) or not {"from", "to", "w"} <= a.keys():
            raise ParseError(f"arc {a!r} needs 'from', 'to' and 'w'")
        triples.append((a["from"], a["to"], a["w"]))
    g = WeightedDigraph.from_arcs(base, nodes, triples)
    terminal = obj.get("terminal")
    if isinstance(terminal, dict):
        unknown = set(map(str, terminal)) - set(g.nodes)
        if unknown:
            raise ParseError(f"terminal values for unknown nodes {sorted(unknown)}")
        named = {str(k): v for k, v in terminal.items()}
        terminal = [named.get(v, "-inf") for v in g.nodes]
    elif terminal is not None and (not isinstance(terminal, list) or len(terminal) != g.n):
        raise ParseError("'terminal' must be an object keyed by node or a list of length n")
    return ProblemFile("graph", base, graph=g, terminal=terminal)


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return load(obj)


def matrix_payload(M):
    S = M.profile
    out = {"kind": "matrix", "matrix": encode_matrix(M)}
    if isinstance(S, IntervalSemiring):
        out["kind"] = "interval-matrix"
        out["semiring"] = S.base.name
        out["mode"] = "strong" if S.strong else "weak"
    else:
        out["semiring"] = S.name
    return out


def problem_payload(A, B):
    out = matrix_payload(A)
    del out["matrix"]
    out.update(kind="bellman-problem", A=encode_matrix(A), B=encode_matrix(B))
    return out


def graph_payload(g, terminal=None):
    arcs = [{"from": g.nodes[i], "to": g.nodes[j], "w": g.profile.format(w)}
            for (i, j), w in sorted(g.arcs.items())]
    out = {"kind": "graph", "semiring": g.profile.name, "nodes": list(g.nodes), "arcs": arcs}
    if terminal is not None:
        out["terminal"] = list(terminal)
    return out

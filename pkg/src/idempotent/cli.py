"""``solve``: command-line front end.

Subcommands read a JSON payload (``--in FILE`` or ``-`` for stdin) and write a
JSON report to stdout or ``--out``.  Exit status is 0 on success, 2 for bad
input (parse errors, invalid elements, shape mismatches) and 3 when the
mathematics refuses (divergent closure, missing capability, no stabilization).
Set ``SOLVER_LOG=info`` or ``debug`` for diagnostics on stderr.
"""
import argparse
import logging
import os
import sys

from . import jsonio
from .bellman import iterate, sample_united_check, solve_interval, solve_point, spectral_criterion
from .errors import (
    CapabilityMissing, ClosureDiverges, ClosureUndefined, MaxIterationsExceeded, NoCycle,
    RootUndefined,
)
from .graph import (
    algebraic_path, best_profit, graph_to_matrix, max_width_paths, shortest_paths,
)
from .interval import IntervalSemiring, degenerate, extension, split
from .laws import check_axioms
from .matrix import closure, eigenvalue, scc_blocks, spectral_radius
from .semiring import make_instance

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 2, 3
MATH_ERRORS = (ClosureDiverges, ClosureUndefined, CapabilityMissing, NoCycle, RootUndefined,
               MaxIterationsExceeded)
LOG_LEVELS = {"off": logging.CRITICAL + 1, "info": logging.INFO, "debug": logging.DEBUG}


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args, *kinds):
    pf = jsonio.loads(_read(args.input))
    if pf.kind not in kinds:
        raise jsonio.ParseError(f"expected a {' or '.join(kinds)} payload, got {pf.kind}")
    return pf


def cmd_closure(args):
    pf = _load(args, "matrix", "interval-matrix", "graph")
    if pf.kind == "graph":
        out = jsonio.matrix_payload(algebraic_path(pf.graph))
        out["nodes"] = list(pf.graph.nodes)
        return out
    return jsonio.matrix_payload(closure(pf.A))


def cmd_solve(args):
    pf = _load(args, "bellman-problem")
    A, B = pf.A, pf.B
    if args.interval and not pf.interval:
        A, B = degenerate(A), degenerate(B)
    interval = isinstance(A.profile, IntervalSemiring)
    if args.samples and not interval:
        raise ValueError("--samples needs interval data (or --interval)")

    X = solve_interval(A, B) if interval else solve_point(A, B)
    report = {"semiring": pf.semiring.name, "interval": interval,
              "solution": jsonio.encode_matrix(X)}
    if interval:
        report["mode"] = "strong" if A.profile.strong else "weak"
    if args.check_spectral:
        report["spectral_ok"] = spectral_criterion(A)
    if args.iterate:
        trace = iterate(A, B, max_k=args.max_k)
        report["stabilized_at"] = trace.stabilized_at
    if args.samples:
        r = sample_united_check(A, B, samples=args.samples, seed=args.seed)
        report["sample_failures"] = r.failures
        report["samples"] = r.as_dict()
    return report


def cmd_path(args):
    pf = _load(args, "graph")
    g = pf.graph
    if args.problem == "profit":
        terminal = pf.terminal if pf.terminal is not None else [0] * g.n
        X = best_profit(g, terminal, horizon=args.horizon)
        return {"problem": "profit", "semiring": "max-plus", "nodes": list(g.nodes),
                "horizon": args.horizon, "value": jsonio.encode_column(X)}
    if args.horizon is not None:
        raise ValueError("--horizon applies to --problem profit only")
    solver = {"shortest": shortest_paths, "width": max_width_paths,
              "generic": algebraic_path}[args.problem]
    M = solver(g)
    return {"problem": args.problem, "semiring": M.profile.name, "nodes": list(g.nodes),
            "matrix": jsonio.encode_matrix(M)}


def cmd_eigen(args):
    pf = _load(args, "matrix", "interval-matrix", "graph")
    A = graph_to_matrix(pf.graph) if pf.kind == "graph" else pf.A
    point = A
    if isinstance(A.profile, IntervalSemiring):
        point = split(A)[1]
    S = point.profile
    blocks = scc_blocks(point)
    report = {"semiring": S.name, "n": point.n,
              "permutation": list(blocks.permutation),
              "blocks": [list(b) for b in blocks.blocks],
              "spectral_radius": S.format(spectral_radius(point))}
    try:
        res = eigenvalue(point)
    except NoCycle:
        report.update(eigenvalue=None, eigenvector=None, irreducible=False)
        return report
    report["eigenvalue"] = S.format(res.eigenvalue)
    report["eigenvector"] = None if res.eigenvector is None else jsonio.encode_column(res.eigenvector)
    report["irreducible"] = res.unique
    return report


def cmd_check(args):
    S = make_instance(args.semiring)
    if args.interval:
        S = extension(S, args.interval == "strong")
    laws = check_axioms(S, cases=args.cases, seed=args.seed)
    return {"semiring": args.semiring, "interval": args.interval, "cases": args.cases,
            "seed": args.seed, "laws": laws, "ok": not any(laws.values())}


def build_parser():
    p = argparse.ArgumentParser(prog="solve", description="Semiring closure and Bellman solver.")
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp):
        sp.add_argument("--in", dest="input", required=True, help="input JSON file, '-' for stdin")
        sp.add_argument("--out", help="write the report here instead of stdout")

    sp = sub.add_parser("closure", help="closure A* of a matrix or graph")
    io(sp)
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("solve", help="minimal solution of X = AX + B")
    io(sp)
    sp.add_argument("--interval", action="store_true",
                    help="treat point data as degenerate intervals")
    sp.add_argument("--iterate", action="store_true", help="also run fixed-point iteration")
    sp.add_argument("--check-spectral", action="store_true", help="report rho(A) <= 1")
    sp.add_argument("--samples", type=int, default=0,
                    help="verify the interval solution against N sampled point problems")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-k", type=int, default=None)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("path", help="path problems on a weighted digraph")
    io(sp)
    sp.add_argument("--problem", choices=("shortest", "width", "profit", "generic"),
                    default="generic")
    sp.add_argument("--horizon", type=int, default=None,
                    help="exact number of steps (profit only)")
    sp.set_defaults(func=cmd_path)

    sp = sub.add_parser("eigen", help="eigenvalue, spectral radius and block structure")
    io(sp)
    sp.set_defaults(func=cmd_eigen)

    sp = sub.add_parser("check", help="randomized axiom check of a built-in semiring")
    sp.add_argument("--semiring", required=True)
    sp.add_argument("--interval", choices=("weak", "strong"), default=None)
    sp.add_argument("--cases", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_check)
    return p


def _configure_logging():
    level = os.environ.get("SOLVER_LOG", "off").lower()
    logging.basicConfig(level=LOG_LEVELS.get(level, LOG_LEVELS["off"]),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv=None):
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except MATH_ERRORS as exc:
        diag = {"error": type(exc).__name__, "message": str(exc)}
        cycle = getattr(exc, "cycle", None)
        if cycle is not None:
            diag["cycle"] = list(cycle)
        print(jsonio.dumps(diag), file=sys.stderr)
        return EXIT_MATH
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"solve: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = jsonio.dumps(report) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "check" and not report["ok"]:
        return EXIT_MATH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

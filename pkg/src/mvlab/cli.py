"""Command-line surface for the visibility and covering solvers.

Verbs map one-to-one onto library operations:

  compute    exact visibility parameter of a family graph
  verify     formula-versus-oracle reports for the closed formulas
  construct  the named transversal-number constructions
  turan      pattern-free extremal edge counts / containment checks
  covering   covering numbers and the minimum-edge constant
  tau        transversal number of a hypergraph file
  explore    budgeted search on ranges with no published value

Exit codes: 0 success (all verdicts pass), 1 a verification failed,
2 usage error (machine-readable object on stderr), 3 a budget-limited
search returned an interval instead of an exact value.

Output is deterministic for a fixed argv: json and csv never include
wall-clock fields. The verify --summary table does include a seconds
column and is the one deliberately non-reproducible view. MVLAB_THREADS
caps the worker pool used to spread independent verify instances.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .budget import Budget
from .constructions import build_complete_uniform, build_generalized_triangle, build_h_nk
from .covering import c_star, covering_number
from .errors import MvlabError
from .families import FamilyKind, parse_family
from .hypergraphs import format_hypergraph, parse_hypergraph, transversal_number
from .theorems import all_formula_ids, parse_range, verify as run_verify
from .turan import contains_pattern, ex_uniform, mubayi_asymptote, parse_pattern
from .visibility import PARAM_TO_VARIANT, max_visibility_number

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

PARAM_CHOICES = tuple(PARAM_TO_VARIANT)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2) with plain text
        raise _UsageError(message)


def _emit_error(kind: str, message: str) -> None:
    print(json.dumps({"error": {"kind": kind, "message": message}}),
          file=sys.stderr)


# ----------------------------------------------------------------------
# output rendering


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _as_rows(obj) -> list[dict]:
    return obj if isinstance(obj, list) else [obj]


_WIDE_COLUMNS = ("certificates", "witness", "blocks", "edges", "transversal")


def _render_table(rows: list[dict]) -> str:
    cols: list[str] = []
    for r in rows:
        for key in r:
            if key not in cols and key not in _WIDE_COLUMNS:
                cols.append(key)
    grid = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), max((len(g[i]) for g in grid), default=0))
              for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for g in grid:
        lines.append("  ".join(v.ljust(w) for v, w in zip(g, widths)).rstrip())
    return "\n".join(lines)


def _render_csv(rows: list[dict]) -> str:
    cols: list[str] = []
    for r in rows:
        for key in r:
            if key not in cols:
                cols.append(key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for r in rows:
        writer.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue().rstrip("\n")


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    elif fmt == "table":
        print(_render_table(_as_rows(obj)))
    elif fmt == "csv":
        print(_render_csv(_as_rows(obj)))
    else:
        raise _UsageError(f"unknown format {fmt!r}")


def _budget(args) -> Budget:
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _threads() -> int:
    raw = os.environ.get("MVLAB_THREADS", "")
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"MVLAB_THREADS must be an integer, got {raw!r}") from None
    if value < 1:
        raise _UsageError(f"MVLAB_THREADS must be >= 1, got {value}")
    return value


# ----------------------------------------------------------------------
# subcommands


def _cmd_compute(args) -> int:
    graph = parse_family(args.family)
    if args.param not in PARAM_TO_VARIANT:
        raise _UsageError(f"unknown parameter {args.param!r}; "
                          f"expected one of {', '.join(PARAM_CHOICES)}")
    cert = max_visibility_number(graph, PARAM_TO_VARIANT[args.param], _budget(args))
    _emit(cert.as_json(), args.format)
    return EXIT_OK if cert.exact else EXIT_BUDGET


def _cmd_explore(args) -> int:
    graph = parse_family(args.family)
    if args.param not in PARAM_TO_VARIANT:
        raise _UsageError(f"unknown parameter {args.param!r}; "
                          f"expected one of {', '.join(PARAM_CHOICES)}")
    cert = max_visibility_number(graph, PARAM_TO_VARIANT[args.param], _budget(args))
    out = cert.as_json()
    lo = cert.value
    hi = cert.value if cert.exact else graph.vertex_count
    out["bounds"] = [lo, hi]
    out["note"] = "exploratory search; no published value is asserted here"
    if graph.kind is FamilyKind.JOHNSON and args.param == "mu-total":
        out["asymptotic_guide"] = {
            "value": mubayi_asymptote(graph.n, graph.k),
            "binding": False,
        }
    _emit(out, args.format)
    return EXIT_OK if cert.exact else EXIT_BUDGET


def _verify_params(args) -> dict:
    params: dict = {}
    if args.n is not None:
        params["n"] = parse_range(args.n)
    if args.k is not None:
        params["k"] = args.k
    if args.family is not None:
        params["family"] = args.family
    if args.samples is not None:
        params["samples"] = args.samples
    return params


def _cmd_verify(args) -> int:
    params = _verify_params(args)
    budget = _budget(args)
    threads = _threads()
    span = params.get("n")
    if threads > 1 and isinstance(span, tuple) and span[1] > span[0]:
        # independent instances; reports are reassembled in argument order
        points = list(range(span[0], span[1] + 1))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(
                lambda n0: run_verify(args.formula, {**params, "n": n0},
                                      budget, args.seed),
                points))
        reports = [r for chunk in chunks for r in chunk]
    else:
        reports = run_verify(args.formula, params, budget, args.seed)

    if args.summary:
        rows = []
        for r in reports:
            rows.append({
                "formula": r.formula.value,
                "params": ",".join(f"{k}={v}" for k, v in sorted(r.params.items())),
                "formula_value": r.formula_value.as_json() if r.formula_value else None,
                "oracle_value": r.oracle_value.as_json() if r.oracle_value else None,
                "verdict": r.verdict,
                "seconds": f"{r.seconds:.2f}",
            })
        print(_render_table(rows))
    else:
        _emit([r.as_json() for r in reports], args.format)

    if any(r.verdict == "fail" for r in reports):
        return EXIT_FAIL
    if any(r.verdict == "skipped" and "precondition" not in r.reason
           for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.what == "generalized-triangle":
        if args.k is None:
            raise _UsageError("generalized-triangle requires --k")
        h = build_generalized_triangle(args.k, args.n)
    elif args.what == "complete-uniform":
        if args.k is None:
            raise _UsageError("complete-uniform requires --k")
        v = args.v if args.v is not None else 2 * args.k - 3
        h = build_complete_uniform(v, args.k, args.n)
    elif args.what == "H_nk":
        if args.n is None or args.k is None:
            raise _UsageError("H_nk requires --n and --k")
        h = build_h_nk(args.n, args.k)
    else:
        raise _UsageError(f"unknown construction {args.what!r}")
    text = format_hypergraph(h)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
        _emit({"what": args.what, "n": h.n, "k": h.k,
               "edges": len(h.edges), "out": args.out}, args.format)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_turan(args) -> int:
    pattern = parse_pattern(args.pattern)
    if args.k is not None and args.k != pattern.k:
        raise _UsageError(f"--k {args.k} contradicts pattern uniformity {pattern.k}")
    if args.check:
        h = parse_hypergraph(_read_input(args.check))
        found = contains_pattern(h, pattern)
        out = {"pattern": args.pattern, "n": h.n, "edges": len(h.edges),
               "contains": found is not None}
        if found is not None:
            apex, zs = found
            out["embedding"] = {"apex": list(apex), "cycle_vertices": list(zs)}
        _emit(out, args.format)
        return EXIT_OK
    if args.n is None:
        raise _UsageError("turan requires --n (or --check FILE)")
    result = ex_uniform(args.n, pattern.k, pattern, _budget(args))
    _emit(result.as_json(), args.format)
    return EXIT_OK if result.exact else EXIT_BUDGET


def _cmd_covering(args) -> int:
    if args.c_star:
        if args.t is not None:
            raise _UsageError("--c-star computes its own block size; drop --t")
        cert = c_star(args.n, args.k, _budget(args))
    else:
        if args.t is None:
            raise _UsageError("covering requires --t (or --c-star)")
        cert = covering_number(args.n, args.k, args.t, _budget(args))
    _emit(cert.as_json(), args.format)
    return EXIT_OK if cert.exact else EXIT_BUDGET


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _cmd_tau(args) -> int:
    h = parse_hypergraph(_read_input(args.infile))
    cert = transversal_number(h)
    _emit(cert.as_json(), args.format)
    return EXIT_OK


# ----------------------------------------------------------------------
# argument wiring


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="mvlab", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "table", "csv"),
                       default="json", help="output format (default json)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized sweeps")
        p.add_argument("--budget-nodes", type=int, default=10_000_000,
                       help="search node budget (default 1e7)")
        p.add_argument("--budget-seconds", type=float, default=60.0,
                       help="search wall-clock budget (default 60)")

    p = sub.add_parser("compute", help="exact visibility parameter of a family")
    p.add_argument("--family", required=True,
                   help="family spec, e.g. kneser:n=7,k=2")
    p.add_argument("--param", required=True, choices=PARAM_CHOICES)
    common(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="formula-versus-oracle reports")
    p.add_argument("--formula", required=True, choices=all_formula_ids())
    p.add_argument("--n", help="value or inclusive range, e.g. 5 or 4..6")
    p.add_argument("--k", type=int)
    p.add_argument("--family", help="family spec for graph-shaped formulas")
    p.add_argument("--samples", type=int,
                   help="random subsets per instance for sweep oracles")
    p.add_argument("--summary", action="store_true",
                   help="fixed-width table with a wall-clock column")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="named transversal constructions")
    p.add_argument("--what", required=True,
                   choices=("generalized-triangle", "complete-uniform", "H_nk"))
    p.add_argument("--n", type=int, help="ground-set size (pads with isolates)")
    p.add_argument("--k", type=int, help="edge size")
    p.add_argument("--v", type=int, help="vertex count for complete-uniform")
    p.add_argument("--out", help="write the hypergraph file here")
    common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("turan", help="pattern-free extremal edge counts")
    p.add_argument("--pattern", required=True,
                   help="pattern spec: c4sus:k=<int> or k4sus:k=<int>")
    p.add_argument("--n", type=int, help="ground-set size for the search")
    p.add_argument("--k", type=int, help="uniformity (must match the pattern)")
    p.add_argument("--check", metavar="FILE",
                   help="test containment in this hypergraph file instead")
    common(p)
    p.set_defaults(func=_cmd_turan)

    p = sub.add_parser("covering", help="covering numbers C(n, k, t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--c-star", action="store_true",
                   help="minimum k-uniform edge count with transversal number 2k")
    common(p)
    p.set_defaults(func=_cmd_covering)

    p = sub.add_parser("tau", help="transversal number of a hypergraph file")
    p.add_argument("--in", dest="infile", required=True,
                   help="hypergraph file, or - for stdin")
    common(p)
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("explore", help="budgeted search on open ranges")
    p.add_argument("--family", required=True)
    p.add_argument("--param", required=True, choices=PARAM_CHOICES)
    common(p)
    p.set_defaults(func=_cmd_explore)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as e:
        _emit_error("usage", str(e))
        return EXIT_USAGE
    except MvlabError as e:
        _emit_error(getattr(e, "kind", "error"), str(e))
        return EXIT_USAGE
    except OSError as e:
        _emit_error("io", str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

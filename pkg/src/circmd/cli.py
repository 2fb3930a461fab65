"""Command-line surface with machine-readable output.

Every command prints a JSON envelope (command echo, parameters, result
payload, timing, version) to stdout; the ``table`` command can instead
render CSV or Markdown of the same values.  Exit codes:

    0  success
    1  verification failure (set not resolving, lemma check failed, ...)
    2  usage error (bad flags, malformed vertex set)
    3  budget exceeded
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Optional

from . import __version__
from .constructions import basis_t4
from .formulas import formula_dim, known_bounds
from .graph import make_consecutive
from .lemmas import REGISTRY, check_lemma, manifest
from .resolve import is_resolving, representation
from .solver import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    SearchOptions,
    brute_force_dim,
    exact_dim,
    find_basis_of_size,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(command: str, parameters: dict, result, started: float) -> None:
    envelope = {
        "command": command,
        "parameters": parameters,
        "result": result,
        "timing_seconds": round(time.perf_counter() - started, 6),
        "version": __version__,
    }
    json.dump(envelope, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _bounds_payload(n: int, t: int) -> Optional[dict]:
    if t < 2 or n < 2 * t + 2:
        return None
    b = known_bounds(n, t)
    return {"lower": b.lower, "upper": b.upper, "provenance": list(b.provenance)}


def _parse_vertex_set(spec: str, n: int, parser: argparse.ArgumentParser) -> list[int]:
    try:
        raw = [int(part) for part in spec.split(",") if part.strip() != ""]
    except ValueError:
        parser.error(f"vertex set {spec!r} is not a comma-separated integer list")
    if not raw:
        parser.error("vertex set is empty")
    reduced = [v % n for v in raw]
    if len(set(reduced)) != len(reduced):
        # duplicates mod n are rejected, not merged: a printed witness that
        # collapses (e.g. containing both 0 and n) should fail loudly
        parser.error(f"vertex set {spec!r} contains duplicates mod {n}")
    return sorted(reduced)


def _cmd_dim(args, parser) -> int:
    started = time.perf_counter()
    params = {"n": args.n, "t": args.t, "method": args.method,
              "max_k": args.max_k, "workers": args.workers, "budget": args.budget}
    g = make_consecutive(args.n, args.t)
    opts = SearchOptions(max_k=args.max_k, worker_count=args.workers,
                         budget=args.budget)
    method = args.method
    try:
        if method in ("auto", "formula"):
            dim = formula_dim(args.n, args.t)
            if dim is not None:
                if args.t == 4:
                    basis = basis_t4(args.n, opts).basis
                else:
                    basis = find_basis_of_size(g, dim, opts)
                result = {"n": args.n, "t": args.t, "dim": dim,
                          "basis": list(basis), "method": "formula",
                          "bounds": _bounds_payload(args.n, args.t)}
                _emit("dim", params, result, started)
                return EXIT_OK
            if method == "formula":
                _emit("dim", params, {"error": "no closed-form dimension known "
                                               f"for n={args.n}, t={args.t}"}, started)
                return EXIT_VERIFICATION_FAILED
        if method == "oracle":
            res = brute_force_dim(g, budget=args.budget)
        else:
            res = exact_dim(g, opts)
        result = {"n": args.n, "t": args.t, "dim": res.dim,
                  "basis": list(res.basis), "method": res.method,
                  "nodes_explored": res.nodes_explored,
                  "lower_bound_used": res.lower_bound_used,
                  "bounds": _bounds_payload(args.n, args.t)}
        _emit("dim", params, result, started)
        return EXIT_OK
    except BudgetExceededError as exc:
        _emit("dim", params, {"error": str(exc)}, started)
        return EXIT_BUDGET


def _cmd_verify(args, parser) -> int:
    started = time.perf_counter()
    g = make_consecutive(args.n, args.t)
    landmarks = _parse_vertex_set(args.set, args.n, parser)
    params = {"n": args.n, "t": args.t, "set": landmarks}
    witness = is_resolving(g, landmarks)
    if witness is None:
        _emit("verify", params, {"resolving": True, "size": len(landmarks)}, started)
        return EXIT_OK
    result = {
        "resolving": False,
        "witness_pair": [witness.u, witness.v],
        "representations": {
            str(witness.u): list(representation(g, witness.u, landmarks).coords),
            str(witness.v): list(representation(g, witness.v, landmarks).coords),
        },
    }
    _emit("verify", params, result, started)
    return EXIT_VERIFICATION_FAILED


def _table_rows(args) -> list[dict]:
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        g = make_consecutive(n, args.t)
        fd = formula_dim(n, args.t)
        note = ""
        if args.t >= n // 2:
            note = "complete graph; residue formula not applicable"
        row = {"n": n, "n_mod_8": n % 8, "formula_dim": fd,
               "searched_dim": None, "agreement": None, "note": note}
        if args.check:
            searched = exact_dim(g, SearchOptions(budget=args.budget)).dim
            row["searched_dim"] = searched
            row["agreement"] = (fd == searched) if fd is not None else None
        rows.append(row)
    return rows


def _render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    return buf.getvalue()


def _render_md(rows: list[dict]) -> str:
    headers = list(rows[0].keys())
    lines = ["| " + " | ".join(headers) + " |",
             "| " + " | ".join("---" for _ in headers) + " |"]
    for row in rows:
        lines.append("| " + " | ".join(
            "" if row[h] is None else str(row[h]) for h in headers) + " |")
    return "\n".join(lines) + "\n"


def _cmd_table(args, parser) -> int:
    started = time.perf_counter()
    if args.n_min > args.n_max:
        parser.error("--n-min must not exceed --n-max")
    params = {"t": args.t, "n_min": args.n_min, "n_max": args.n_max,
              "format": args.format, "check": args.check}
    try:
        rows = _table_rows(args)
    except BudgetExceededError as exc:
        _emit("table", params, {"error": str(exc)}, started)
        return EXIT_BUDGET
    if args.format == "json":
        _emit("table", params, {"rows": rows}, started)
    elif args.format == "csv":
        sys.stdout.write(_render_csv(rows))
    else:
        sys.stdout.write(_render_md(rows))
    return EXIT_OK


def _cmd_construct(args, parser) -> int:
    started = time.perf_counter()
    params = {"n": args.n}
    try:
        report = basis_t4(args.n, SearchOptions(budget=args.budget))
    except BudgetExceededError as exc:
        _emit("construct", params, {"error": str(exc)}, started)
        return EXIT_BUDGET
    result = {"n": report.n, "basis": list(report.basis), "source": report.source,
              "verified": report.verified,
              "matches_formula": report.matches_formula, "note": report.note}
    _emit("construct", params, result, started)
    return EXIT_OK if report.verified else EXIT_VERIFICATION_FAILED


def _cmd_check_lemmas(args, parser) -> int:
    started = time.perf_counter()
    params = {"id": args.id, "k_max": args.k_max}
    if args.id == "all":
        descriptors = list(REGISTRY.values())
    elif args.id in REGISTRY:
        descriptors = [REGISTRY[args.id]]
    else:
        parser.error(f"unknown descriptor id {args.id!r}; "
                     f"known ids: {', '.join(REGISTRY)}")
    k_range = range(1, args.k_max + 1)
    reports = []
    any_failure = False
    try:
        for d in descriptors:
            report = check_lemma(d, k_range)
            counts = {"pass": 0, "fail": 0, "vacuous": 0, "degenerate": 0}
            for r in report.results:
                counts[r.status] += 1
            failures = [{"n": r.n, "params": dict(r.params), "detail": r.detail}
                        for r in report.failed]
            any_failure = any_failure or bool(failures)
            reports.append({"id": d.id, "claim": d.claim,
                            "instantiations": len(report.results),
                            "counts": counts, "failures": failures})
    except BudgetExceededError as exc:
        _emit("check-lemmas", params, {"error": str(exc)}, started)
        return EXIT_BUDGET
    result = {"descriptors": reports, "registry_size": len(REGISTRY),
              "manifest": manifest() if args.id == "all" else None}
    _emit("check-lemmas", params, result, started)
    return EXIT_VERIFICATION_FAILED if any_failure else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circmd",
        description="Metric dimension of circulant graphs C(n, +/-{1..t})")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="max candidate sets per search level "
                            "(default from CIRCMD_BUDGET)")

    p_dim = sub.add_parser("dim", help="compute the metric dimension")
    p_dim.add_argument("--n", type=int, required=True)
    p_dim.add_argument("--t", type=int, required=True)
    p_dim.add_argument("--method", choices=("auto", "formula", "search", "oracle"),
                       default="auto")
    p_dim.add_argument("--max-k", type=int, default=None, dest="max_k")
    p_dim.add_argument("--workers", type=int, default=1)
    add_budget(p_dim)
    p_dim.set_defaults(func=_cmd_dim)

    p_verify = sub.add_parser("verify", help="check whether a set resolves the graph")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--t", type=int, required=True)
    p_verify.add_argument("--set", type=str, required=True,
                          help='comma-separated vertices, e.g. "0,2,3,10"')
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="dimension table over a range of n")
    p_table.add_argument("--t", type=int, required=True)
    p_table.add_argument("--n-min", type=int, required=True, dest="n_min")
    p_table.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_table.add_argument("--format", choices=("csv", "json", "md"), default="json")
    p_table.add_argument("--check", action="store_true",
                         help="cross-check the formula by exact search")
    add_budget(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_con = sub.add_parser("construct", help="emit a verified basis for t = 4")
    p_con.add_argument("--n", type=int, required=True)
    add_budget(p_con)
    p_con.set_defaults(func=_cmd_construct)

    p_lem = sub.add_parser("check-lemmas", help="validate the lemma registry")
    p_lem.add_argument("--id", type=str, default="all")
    p_lem.add_argument("--k-max", type=int, default=1, dest="k_max")
    p_lem.set_defaults(func=_cmd_check_lemmas)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ValueError as exc:
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())

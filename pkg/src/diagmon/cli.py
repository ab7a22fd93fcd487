"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Sequence

from .diagrams import BudgetExceeded, EvaluationMap, Flavor, enumerate_diagrams

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def parse_params(text: str) -> tuple[EvaluationMap, bool]:
    """Parse the --params grammar; the flag is True for ``generic``."""
    t = text.strip().lower()
    if t in ("classical", "1"):
        return EvaluationMap.classical(), False
    if t in ("zero", "0"):
        return EvaluationMap.zero(), False
    if t == "generic":
        return EvaluationMap.classical(), True
    if t.startswith("prefix="):
        fields = dict(part.split("=", 1) for part in t.split(";") if part)
        prefix = tuple(int(x) for x in fields["prefix"].split(","))
        return EvaluationMap(prefix, int(fields.get("period", 1))), False
    m = re.fullmatch(r"(a\d+=[01])(,a\d+=[01])*", t)
    if m:
        vals = {int(k[1:]): int(v) for k, v in (p.split("=") for p in t.split(","))}
        top = max(vals) + 1
        return EvaluationMap.from_values(*[vals.get(g, 1) for g in range(top)], 1), False
    raise UsageError(f"cannot parse --params {text!r}")


def _flavor(text: str) -> Flavor:
    try:
        return Flavor.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _emit(payload, rows: list[dict] | None, as_csv: bool, fields: Sequence[str] | None = None) -> None:
    if as_csv and rows is not None:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(fields or rows[0].keys()), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(json.dumps(payload, default=str) + "\n")


# ------------------------------------------------------------ subcommands


def cmd_enumerate(args) -> int:
    fl = _flavor(args.flavor)
    ds = enumerate_diagrams(fl, args.n, args.budget)
    if args.count_only:
        _emit({"count": len(ds)}, None, False)
        return EXIT_OK
    rows = [{"index": i, "k": d.through_strands(), "blocks": json.dumps(d.labeled_blocks())} for i, d in enumerate(ds)]
    _emit({"count": len(ds), "diagrams": [d.to_dict() for d in ds]}, rows, args.csv, ["index", "k", "blocks"])
    return EXIT_OK


def cmd_analyze(args) -> int:
    from .monoid import (GENERIC, NontrivialHClass, NoNontrivialSimple, apexes, build_diagram_monoid,
                         eggbox_report, green, is_well_connected, repgap, simple_dimensions)
    fl = _flavor(args.flavor)
    a, generic = parse_params(args.params)
    m = build_diagram_monoid(fl, args.n, a, args.budget)
    g = green(m)
    at = GENERIC if generic else None
    out = {"flavor": fl.value, "n": args.n, "params": "generic" if generic else a.describe(),
           "size": m.size, "has_zero": m.zero is not None, "d_equals_j": g.d_equals_j,
           "h_trivial": g.h_trivial()}
    try:
        dims = simple_dimensions(m, at, g, args.seed)
        out["simple_dims"] = {str(k): v for k, v in sorted(dims.items(), key=lambda kv: -kv[0])}
        try:
            out["repgap"] = repgap(m, at, g, args.seed)
        except NoNontrivialSimple:
            out["repgap"] = None
    except NontrivialHClass as e:
        out["simple_dims"] = None
        out["simple_dims_error"] = str(e)
    out["apexes"] = sorted(apexes(m, at, g))
    out["connectedness"] = is_well_connected(m).to_dict()
    out["eggbox"] = eggbox_report(m, g)
    rows = None
    if out.get("simple_dims"):
        rows = [{"flavor": fl.value, "n": args.n, "params": out["params"], "apex": k, "rank": v}
                for k, v in out["simple_dims"].items()]
    _emit(out, rows, args.csv, ["flavor", "n", "params", "apex", "rank"])
    return EXIT_OK


def cmd_cell_dims(args) -> int:
    from .dims import dim_table
    fl = _flavor(args.flavor)
    rows = dim_table(fl, args.n)
    _emit({"flavor": fl.value, "n": args.n, "cells": rows}, rows, args.csv, ["flavor", "n", "k", "lambda", "dim"])
    return EXIT_OK


def _commutative(spec: str):
    from .twist import CommutativeMonoid
    kind, _, arg = spec.partition(":")
    if kind == "saturating":
        return CommutativeMonoid.saturating(int(arg))
    if kind == "cyclic":
        return CommutativeMonoid.cyclic(int(arg))
    raise UsageError(f"unknown --M {spec!r}; use saturating:<m> or cyclic:<m>")


def cmd_twist_check(args) -> int:
    from .twist import (HypothesisFailed, NotTight, canonical_twisting, is_tight, twisted_product,
                        twisted_simple_dims, verify_green_product, verify_idempotent_formula,
                        verify_main_theorem)
    fl = _flavor(args.flavor)
    a, _ = parse_params(args.params)
    M = _commutative(args.M)
    t = canonical_twisting(fl, args.n, a, args.budget)
    tight, witness = is_tight(t)
    out = {"flavor": fl.value, "n": args.n, "params": a.describe(), "M": args.M, "q": args.q,
           "cocycle": t.is_cocycle(), "tight": tight, "witness": witness, "mixed_pairs": t.mixed_pairs,
           "evidence": "finite-n check", "reports": []}
    failed = not out["cocycle"]
    if out["cocycle"]:
        tm = twisted_product(M, t, args.q)
        for fn in (verify_green_product, verify_idempotent_formula, verify_main_theorem, twisted_simple_dims):
            try:
                rep = fn(tm)
            except (NotTight, HypothesisFailed) as e:
                rep = {"theorem": fn.__name__, "refused": str(e)}
            failed |= bool(rep.get("violations"))
            out["reports"].append(rep)
    _emit(out, None, False)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_nonss(args) -> int:
    from .nonss import InvalidOrder, asymptotic_ratio, simple_dims_mo, simple_dims_tl, tl_bounds_report
    fam = {"tl": "TL", "temperley-lieb": "TL", "mo": "Mo", "motzkin": "Mo"}.get(args.family.lower())
    if fam is None:
        raise UsageError(f"unknown family {args.family!r}")
    try:
        dims = simple_dims_tl(args.n, args.l) if fam == "TL" else simple_dims_mo(args.n, args.l)
    except InvalidOrder as e:
        raise UsageError(str(e)) from None
    rows = [{"n": args.n, "k": k, "b": b} for k, b in sorted(dims.items())]
    out = {"family": fam, "n": args.n, "l": args.l, "rows": [[r["k"], r["b"]] for r in rows],
           "b_sum": sum(dims.values())}
    if args.report:
        if fam == "TL" and args.l in (2, 3):
            out["report"] = asymptotic_ratio("TL", args.n, args.l)
        elif fam == "TL":
            out["report"] = tl_bounds_report(args.n, args.l)
    _emit(out, rows, args.csv, ["n", "k", "b"])
    return EXIT_OK


def cmd_concentrate(args) -> int:
    from .walks import concentrate_rows, exact_distribution, gaussian_profile_check, tail_mass
    fl = _flavor(args.flavor)
    d = exact_distribution(fl, args.n)
    rows = concentrate_rows(d)
    out = {"flavor": fl.value, "n": args.n, "window": args.window,
           "tail_mass": float(tail_mass(d, args.window)), "rows": rows}
    try:
        out["profile"] = gaussian_profile_check(d, args.window)
    except ValueError as e:
        out["profile"] = {"error": str(e)}
    _emit(out, rows, args.csv, ["k", "prob", "gaussian_pred"])
    return EXIT_OK


def cmd_plancherel(args) -> int:
    from .walks import plancherel_walk
    tv = plancherel_walk(args.t, args.steps)
    rows = [{"step": i, "tv": float(x)} for i, x in enumerate(tv)]
    _emit({"t": args.t, "steps": args.steps, "tv": [r["tv"] for r in rows]}, rows, args.csv, ["step", "tv"])
    return EXIT_OK


def cmd_verify_all(args) -> int:
    from .verify import SUITES, run_suite
    names = [args.suite] if args.suite else list(SUITES)
    if args.suite and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    reports = [run_suite(n, args.seed) for n in names]
    for r in reports:
        print(f"[{'PASS' if r['ok'] else 'FAIL'}] {r['criterion']:>2} {r['suite']} ({r['seconds']}s)", file=sys.stderr)
    _emit({"ok": all(r["ok"] for r in reports), "suites": reports}, None, False)
    return EXIT_OK if all(r["ok"] for r in reports) else EXIT_FAILED


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--csv", action="store_true", help="tabular output where available")
    p = _Parser(prog="diagmon", description="Diagram monoid workbench")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def flavor_n(sp, budget=True):
        sp.add_argument("--flavor", required=True)
        sp.add_argument("--n", type=int, required=True)
        if budget:
            sp.add_argument("--budget", type=int, default=None, help="largest n allowed")

    sp = sub.add_parser("enumerate", parents=[common])
    flavor_n(sp)
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("analyze", parents=[common])
    flavor_n(sp)
    sp.add_argument("--params", default="classical")
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("cell-dims", parents=[common])
    flavor_n(sp, budget=False)
    sp.set_defaults(fn=cmd_cell_dims)

    sp = sub.add_parser("twist-check", parents=[common])
    flavor_n(sp)
    sp.add_argument("--params", default="classical")
    sp.add_argument("--M", default="saturating:5")
    sp.add_argument("--q", type=int, default=1)
    sp.set_defaults(fn=cmd_twist_check)

    sp = sub.add_parser("nonss", parents=[common])
    sp.add_argument("--family", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--report", action="store_true", help="add the asymptotic ratio report")
    sp.set_defaults(fn=cmd_nonss)

    sp = sub.add_parser("concentrate", parents=[common])
    flavor_n(sp, budget=False)
    sp.add_argument("--window", type=float, default=3.0)
    sp.set_defaults(fn=cmd_concentrate)

    sp = sub.add_parser("plancherel", parents=[common])
    sp.add_argument("--t", type=int, default=5)
    sp.add_argument("--steps", type=int, default=50)
    sp.set_defaults(fn=cmd_plancherel)

    sp = sub.add_parser("verify-all", parents=[common])
    sp.add_argument("--suite", default=None)
    sp.set_defaults(fn=cmd_verify_all)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) if e.code in (0, None) else EXIT_USAGE
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"diagmon: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"diagmon: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())

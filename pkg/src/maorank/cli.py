"""Command-line front end.

    maorank verify {elementary,maogf,...,all} [--order N] [--max-n N] [--format json|text]
    maorank coeffs SERIES --order N [--format csv|json]
    maorank scan {1..7,nonneg} [--max-n N] [--format json|text]

Exit codes: 0 when nothing failed and no counterexample turned up, 1 otherwise,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import qseries, verify
from .partitions import d_series
from .report import CheckReport, Status

SCHEMA_VERSION = "1.0"

# per-check order used when --order is not given
DEFAULT_ORDERS = {
    "elementary": 100,
    "jacobi": 200,
    "phiid": 500,
    "baruah-barman": 500,
    "maogf": 100,
    "gfprop": 80,
    "main-theorem": 500,
    "conclusion": 300,
}

CHECK_NAMES = ("elementary", "maogf", "gfprop", "phiid", "baruah-barman",
               "main-theorem", "dyson", "ramanujan", "conclusion")
# canonical order for "all": elementary, identities, oracle checks, scans
ALL_ORDER = ("elementary", "phiid", "baruah-barman", "maogf", "gfprop",
             "main-theorem", "dyson", "ramanujan", "conclusion", "conjectures")


def _order(name: str, order: int | None) -> int:
    return DEFAULT_ORDERS[name] if order is None else order


def plan(name: str, order: int | None, max_n: int) -> list[tuple[str, dict]]:
    """Tasks (verify-level function name, kwargs) behind one check name."""
    if name == "elementary":
        return [("check_elementary_identities", {"order": _order("elementary", order)}),
                ("check_jacobi_triple_product", {"order": _order("jacobi", order)})]
    if name == "maogf":
        return [("check_maogf", {"order": _order("maogf", order)})]
    if name == "gfprop":
        return [("check_gfprop", {"order": _order("gfprop", order)})]
    if name == "phiid":
        return [("check_phiid", {"order": _order("phiid", order)})]
    if name == "baruah-barman":
        return [("check_baruah_barman", {"order": _order("baruah-barman", order)})]
    if name == "main-theorem":
        return [("check_main_theorem", {"order": _order("main-theorem", order),
                                        "oracle_max": max_n})]
    if name == "dyson":
        return [("check_dyson_equidistribution", {"max_k": max(0, (max_n - 6) // 7)})]
    if name == "ramanujan":
        return [("check_ramanujan", {"max_n": max_n})]
    if name == "conclusion":
        return [("conclusion_checks", {"order": _order("conclusion", order)})]
    if name == "conjectures":
        return [("conjecture_scan", {"cid": c, "max_n": max_n}) for c in verify.CONJECTURES]
    if name == "all":
        return [t for n in ALL_ORDER for t in plan(n, order, max_n)]
    raise KeyError(name)


def _run_task(task: tuple[str, dict]) -> list[CheckReport]:
    fname, kwargs = task
    fn = getattr(qseries, fname, None) or getattr(verify, fname)
    out = fn(**kwargs)
    return out if isinstance(out, list) else [out]


def run_tasks(tasks: list[tuple[str, dict]], jobs: int = 1) -> list[CheckReport]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_task, tasks))    # map keeps task order
    else:
        chunks = [_run_task(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]


def summarize(reports: list[CheckReport]) -> dict:
    def count(st):
        return sum(r.status is st for r in reports)
    return {
        "total": len(reports),
        "passed": count(Status.PASS),
        "failed": count(Status.FAIL),
        "conjectures_held": count(Status.HOLDS),
        "counterexamples": count(Status.COUNTEREXAMPLE),
    }


def exit_code(reports: list[CheckReport]) -> int:
    s = summarize(reports)
    return 0 if s["failed"] == 0 and s["counterexamples"] == 0 else 1


def report_document(reports: list[CheckReport], timing: bool = True) -> dict:
    checks = []
    for r in reports:
        d = r.to_dict()
        if not timing:
            d["runtime_ms"] = 0
        checks.append(d)
    return {"schema_version": SCHEMA_VERSION, "checks": checks,
            "summary": summarize(reports)}


def render_text(reports: list[CheckReport], timing: bool = True) -> str:
    labels = {Status.PASS: "PASS", Status.FAIL: "FAIL",
              Status.HOLDS: "HOLDS-TO-ORDER", Status.COUNTEREXAMPLE: "COUNTEREXAMPLE"}
    lines = []
    for r in reports:
        line = f"{labels[r.status]:<15} {r.check_id:<34} order={r.order}"
        if timing:
            line += f"  ({r.runtime_ms:.1f} ms)"
        lines.append(line)
        if r.first_discrepancy is not None:
            e, lhs, rhs = r.first_discrepancy
            lines.append(f"    first discrepancy at q^{e}: {lhs} != {rhs}")
        if r.witnesses:
            lines.append(f"    witnesses: {', '.join(map(str, r.witnesses))}")
        if "statement" in r.details:
            lines.append(f"    {r.details['statement']}")
        if "holding_variants" in r.details:
            lines.append(f"    holds: {'; '.join(r.details['holding_variants'])}")
    s = summarize(reports)
    lines.append(
        f"{s['total']} checks: {s['passed']} passed, {s['failed']} failed, "
        f"{s['conjectures_held']} conjectures held to order, "
        f"{s['counterexamples']} counterexamples")
    return "\n".join(lines) + "\n"


def emit(reports: list[CheckReport], fmt: str, timing: bool, out) -> int:
    if fmt == "json":
        out.write(json.dumps(report_document(reports, timing), indent=2) + "\n")
    else:
        out.write(render_text(reports, timing))
    return exit_code(reports)


SERIES = {
    "d": lambda order: d_series(order),
    "mao-rhs": lambda order: verify.mao_gf_rhs(order),
    "gfprop-rhs": lambda order: verify.gfprop_rhs(order),
    "phi2-sum": lambda order: verify.phi2_sum(order),
    "phi2-ratio": lambda order: verify.phi2_ratio(order),
    "lambert-6-3": lambda order: qseries.lambert_sum(verify.LAMBERT_PROP, order),
    "lambert-18-9": lambda order: qseries.lambert_sum(verify.LAMBERT_MAO_2, order),
    "lambert-18-9-3": lambda order: qseries.lambert_sum(verify.LAMBERT_MAO_1, order),
}


def coefficient_rows(name: str, order: int) -> list[tuple[int, int, int]]:
    s = SERIES[name](order)
    lo = min(s.min_exp, 0)
    return [(e, c.numerator, c.denominator)
            for e, c in zip(range(lo, order + 1), map(s.coefficient, range(lo, order + 1)))]


def render_coeffs(name: str, order: int, fmt: str) -> str:
    rows = coefficient_rows(name, order)
    if fmt == "json":
        return json.dumps({
            "schema_version": SCHEMA_VERSION, "series": name, "order": order,
            "coefficients": [{"exponent": e, "numerator": n, "denominator": d}
                             for e, n, d in rows],
        }, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["exponent", "numerator", "denominator"])
    w.writerows(rows)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="maorank", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help="truncation order (default: per-check, 500 for series identities)")
    common.add_argument("--max-n", type=int, default=100,
                        help="largest partition argument for oracle scans (default 100)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--no-timing", action="store_true",
                        help="zero runtime fields for byte-stable output")

    v = sub.add_parser("verify", parents=[common], help="run identity and oracle checks")
    v.add_argument("check", choices=CHECK_NAMES + ("all",))
    v.add_argument("--format", choices=("json", "text"), default="text")

    c = sub.add_parser("coeffs", help="dump exact coefficients")
    c.add_argument("series", choices=tuple(SERIES))
    c.add_argument("--order", type=int, default=20)
    c.add_argument("--format", choices=("csv", "json"), default="csv")

    s = sub.add_parser("scan", parents=[common], help="scan an open inequality")
    s.add_argument("target", choices=tuple(str(i) for i in verify.CONJECTURES) + ("nonneg",))
    s.add_argument("--format", choices=("json", "text"), default="text")
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "coeffs":
        if args.order < 0:
            parser.error("--order must be non-negative")
        out.write(render_coeffs(args.series, args.order, args.format))
        return 0
    if args.command == "verify":
        reports = run_tasks(plan(args.check, args.order, args.max_n), args.jobs)
    elif args.target == "nonneg":
        reports = [verify.nonnegativity_scan(args.order or args.max_n)]
    else:
        reports = [verify.conjecture_scan(int(args.target), args.max_n)]
    return emit(reports, args.format, not args.no_timing, out)


if __name__ == "__main__":
    sys.exit(main())

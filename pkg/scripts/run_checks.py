#!/usr/bin/env python
"""Run every check at deeper orders than the CLI defaults and save the report.

    python scripts/run_checks.py --order 1500 --max-n 200 --out report.json
"""

import argparse
import json
import time

from maorank.cli import plan, report_document, render_text, run_tasks


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=200)
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = run_tasks(plan("all", args.order, args.max_n), args.jobs)
    print(render_text(reports), end="")
    print(f"wall time {time.perf_counter() - t0:.1f} s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report_document(reports), fh, indent=2)


if __name__ == "__main__":
    main()

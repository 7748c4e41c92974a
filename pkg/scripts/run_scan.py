#!/usr/bin/env python3
"""Full formula-vs-oracle scan, written to a JSON report.

    python scripts/run_scan.py --max-n 8 --max-edges 10 --out scan_n8.json
"""

import argparse
import json
import time

from antiramsey.scan import scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-edges", type=int, default=10)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = scan(args.max_n, args.max_edges, conjecture=True, jobs=args.jobs)
    elapsed = time.perf_counter() - t0
    data = report.to_dict() | {"elapsed_s": round(elapsed, 2)}
    if args.out:
        with open(args.out, "w") as f:
            json.dump(data, f, indent=1)
    s = report.summary
    print(f"{s['instances']} instances in {elapsed:.1f}s")
    print(f"l_q disagreements: {s['disagreements']}, ar disagreements: {s['ar_disagreements']} "
          f"({s['ar_checked']} ar checks)")
    print(f"exceptional: {s['exceptional_hits']}")
    print(f"strict gap:  {s['strict_gap_hits']}")
    if "conjecture_checked" in s:
        print(f"3q >= 2n+1: boundary formula held on {s['conjecture_matches']}/{s['conjecture_checked']}")


if __name__ == "__main__":
    main()

"""Run the identity registry over a set of fields and write a JSON report.

    python scripts/run_registry.py --q 3 4 5 7 8 9 --seed 42 --out registry.json
"""

import argparse
import json
import time
from collections import Counter

from ffappell.identities import auto_strategy, check_all
from ffappell.ff_core import field_of_order


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[3, 4, 5, 7, 8, 9])
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--mode", choices=("exact", "float"), default="exact")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="registry.json")
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = check_all(args.q, seed=args.seed, samples=args.samples, mode=args.mode, jobs=args.jobs)
    status = Counter()
    for r in reports:
        key = "error" if r.error else ("fail" if r.failures else "pass")
        status[key, r.quarantined] += 1
        if not r.passed:
            print(f"{r.identity:22s} q={r.q:<3d} {auto_strategy(r.q):10s} failures={len(r.failures)} {r.error or ''}")
    print(f"{len(reports)} reports in {time.perf_counter() - t0:.1f}s: "
          + ", ".join(f"{k}{' (quarantined)' if qu else ''}={v}" for (k, qu), v in sorted(status.items())))
    with open(args.out, "w") as fh:
        json.dump({"fields": [field_of_order(q).header() for q in args.q],
                   "reports": [r.to_json() for r in reports]}, fh, indent=1)


if __name__ == "__main__":
    main()

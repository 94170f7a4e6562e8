"""Probe the identities whose printed form or domain is in doubt.

For each question, run the registered form and the candidate alternative
exhaustively over small fields and print failure counts plus one witness.

    python scripts/probe_open_questions.py --q 3 4 5 7
"""

import argparse
from collections import Counter

from ffappell.identities import check_identity, get

PAIRS = [
    ("C'=B' reduction: printed vs bare term removed", "thm34-bprime", "thm34-bprime-variant"),
    ("generating function: x != 0 vs x = 0 allowed", "thm42-genfun", "thm42-genfun-x0"),
    ("B-epsilon reduction: printed vs corrected delta term", "thm32-a", "thm32-a-derived"),
    ("epsilon-B' reduction: printed vs corrected delta term", "thm32-b", "thm32-b-derived"),
    ("F2 at x = 1 (no side condition)", "f2-at-x1", None),
]


def describe(ident, q):
    r = check_identity(get(ident), q, "exhaustive")
    line = f"  {ident:22s} q={q}: checked={r.tuples_checked:<6d} failures={len(r.failures)}"
    if r.failures:
        f = r.failures[0]
        line += f"\n      witness {f['params']} lhs={f['lhs']} rhs={f['rhs']}"
    return line, r


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[3, 4, 5])
    args = ap.parse_args()
    for title, a, b in PAIRS:
        print(title)
        for q in args.q:
            for ident in filter(None, (a, b)):
                line, r = describe(ident, q)
                print(line)
                if ident.startswith("thm32") and r.failures and not ident.endswith("derived"):
                    key = "Cp" if ident == "thm32-a" else "C"
                    hit = Counter(f["params"]["A"] == f["params"][key] for f in r.failures)
                    print(f"      failures with A = {key}: {hit[True]}, otherwise: {hit[False]}")


if __name__ == "__main__":
    main()

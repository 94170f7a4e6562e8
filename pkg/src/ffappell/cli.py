"""Command-line front end: ``ffappell verify | eval | table``.

Exit status: 0 all pass, 1 identity failure, 2 usage error,
3 environment or limits (bad field size, budget exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import dataclass, field

from . import appell, hyper
from .chars import Character, char_eval
from .cyclo import CycNum
from .ff_core import DEFAULT_BOUND, FieldError, field_of_order, prime_power
from .identities import DEFAULT_BUDGET, batch_ok, check_all, registry

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMITS = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    q_values: list
    ids: list | None = None  # None means every registry identity
    mode: str = "exact"
    strategy: str = "auto"
    samples: int = 1000
    seed: int = 0
    out: str | None = None
    fmt: str = "json"
    budget: int = DEFAULT_BUDGET
    bound: int = DEFAULT_BOUND
    jobs: int = 1
    explicit_q: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.strategy != "exhaustive" and self.samples < 1:
            raise UsageError("sampled strategy needs --samples >= 1")
        if self.mode not in ("exact", "float"):
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.fmt not in ("json", "csv"):
            raise UsageError(f"unknown format {self.fmt!r}")


def _budget_default() -> int:
    env = os.environ.get("FFAPPELL_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
        return True
    except FieldError:
        return False


def _field_header(q: int, bound: int) -> dict:
    try:
        return field_of_order(q, bound=bound).header()
    except FieldError as exc:
        return {"q": q, "error": f"{type(exc).__name__}: {exc}"}


def _header_lines(h: dict) -> list[str]:
    if "error" in h:
        return [f"# F_{h['q']}: {h['error']}"]
    return [f"# F_{h['q']}: p={h['p']} k={h['k']} modulus={h['modulus']} generator={h['generator']}"]


def reports_to_csv(reports, headers) -> str:
    buf = io.StringIO()
    for h in headers:
        buf.write(_header_lines(h)[0] + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity", "q", "mode", "strategy", "seed", "tuples_checked", "rejected",
                "failures", "quarantined", "error", "elapsed_ms"])
    for r in reports:
        w.writerow([r.identity, r.q, r.mode, r.strategy, r.seed, r.tuples_checked, r.rejected,
                    len(r.failures), r.quarantined, r.error or "", r.elapsed_ms])
    return buf.getvalue()


def reports_to_json(reports, headers) -> str:
    doc = {"fields": headers, "reports": [r.to_json() for r in reports]}
    return json.dumps(doc, indent=1) + "\n"


def _summary_line(r) -> str:
    if r.error:
        status = "ERROR"
    elif r.failures:
        status = "QUARANTINED-FAIL" if r.quarantined else "FAIL"
    else:
        status = "PASS"
    line = (f"{status:16s} {r.identity:22s} q={r.q:<4d} {r.strategy:10s} "
            f"checked={r.tuples_checked} rejected={r.rejected} failures={len(r.failures)}")
    return line + (f"  {r.error}" if r.error else "")


def cmd_verify(cfg: RunConfig, stdout=sys.stdout) -> int:
    reports = check_all(
        cfg.q_values, strategy=cfg.strategy, seed=cfg.seed, samples=cfg.samples, mode=cfg.mode,
        ids=cfg.ids, budget=cfg.budget, bound=cfg.bound, jobs=cfg.jobs,
    )
    headers = [_field_header(q, cfg.bound) for q in cfg.q_values]
    for h in headers:
        print(_header_lines(h)[0], file=stdout)
    for r in reports:
        print(_summary_line(r), file=stdout)
    if cfg.out:
        text = reports_to_csv(reports, headers) if cfg.fmt == "csv" else reports_to_json(reports, headers)
        with open(cfg.out, "w") as fh:
            fh.write(text)
    if not batch_ok(reports):
        if any(r.failures and not r.quarantined for r in reports):
            return EXIT_FAIL
        return EXIT_LIMITS
    return EXIT_OK


# -- eval ---------------------------------------------------------------------

EVAL_PARAMS = {
    "jacobi": ("A", "B"),
    "binom": ("A", "B"),
    "2f1": ("A", "B", "C", "x"),
    "2f1cs": ("A", "B", "C", "x"),
    "3f2": ("numer", "denom", "x"),
    "f1": ("A", "B", "Bp", "C", "x", "y"),
    "f2": ("A", "B", "Bp", "C", "Cp", "x", "y"),
    "f2cs": ("A", "B", "Bp", "C", "Cp", "x", "y"),
}
_ALL_EVAL = ("A", "B", "Bp", "C", "Cp", "x", "y", "numer", "denom")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def evaluate(function: str, q: int, params: dict, bound: int = DEFAULT_BOUND) -> CycNum:
    """Evaluate one named function; params hold exponents and element indices."""
    if function not in EVAL_PARAMS:
        raise UsageError(f"unknown function {function!r}")
    need = EVAL_PARAMS[function]
    given = {k for k, v in params.items() if v is not None}
    if given != set(need):
        raise hyper.ArityMismatch(f"{function} takes {', '.join(need)}; got {', '.join(sorted(given)) or 'nothing'}")
    F = field_of_order(q, bound=bound)

    def ch(m):
        if not 0 <= m < F.n:
            raise UsageError(f"character exponent {m} outside [0, {F.n - 1}]")
        return Character(F, m)

    def el(x):
        if not 0 <= x < F.q:
            raise UsageError(f"element index {x} outside [0, {F.q - 1}]")
        return x

    p = params
    if function == "jacobi":
        return hyper.jacobi(ch(p["A"]), ch(p["B"]))
    if function == "binom":
        return hyper.binom(ch(p["A"]), ch(p["B"]))
    if function in ("2f1", "2f1cs"):
        f = hyper.f21_def if function == "2f1" else hyper.f21_charsum
        return f(ch(p["A"]), ch(p["B"]), ch(p["C"]), el(p["x"]))
    if function == "3f2":
        numer, denom = _int_list(p["numer"]), _int_list(p["denom"])
        if len(numer) != 3 or len(denom) != 2:
            raise hyper.ArityMismatch("3f2 takes 3 upper and 2 lower characters")
        return hyper.fpq_charsum([ch(m) for m in numer], [ch(m) for m in denom], el(p["x"]))
    if function == "f1":
        return appell.f1_def(ch(p["A"]), ch(p["B"]), ch(p["Bp"]), ch(p["C"]), el(p["x"]), el(p["y"]))
    f = appell.f2_def if function == "f2" else appell.f2_charsum
    return f(*(ch(p[k]) for k in ("A", "B", "Bp", "C", "Cp")), el(p["x"]), el(p["y"]))


def cmd_eval(args, stdout=sys.stdout) -> int:
    params = {k: getattr(args, k) for k in _ALL_EVAL}
    value = evaluate(args.function, args.q, params, bound=args.bound)
    F = field_of_order(args.q, bound=args.bound)
    print(_header_lines(F.header())[0], file=stdout)
    print(f"coeffs: {value.to_list()}", file=stdout)
    print(f"value: {value}", file=stdout)
    if args.float:
        z = value.to_complex()
        print(f"float: {z.real:.12g} {z.imag:+.12g}i", file=stdout)
    return EXIT_OK


# -- table --------------------------------------------------------------------

def table_rows(kind: str, q: int, bound: int = DEFAULT_BOUND) -> tuple[list, list]:
    F = field_of_order(q, bound=bound)
    if kind == "dlog":
        cols = ["element", "dlog"]
        rows = [[F.exp(j), j % F.n] for j in range(1, F.n + 1)]
        return cols, rows
    if kind == "binom":
        bt = hyper.binomial_table(F)
        cols = ["a", "b", "coeffs", "value"]
        rows = []
        for a in range(F.n):
            for b in range(F.n):
                v = bt.binom(a, b).reduce()
                rows.append([a, b, v.to_list(), str(v)])
        return cols, rows
    if kind == "chars":
        cols = ["m", "x", "coeffs", "value"]
        rows = []
        for m in range(F.n):
            for x in F.elements():
                v = char_eval(Character(F, m), x)
                rows.append([m, x, v.to_list(), str(v)])
        return cols, rows
    raise UsageError(f"unknown table {kind!r}")


def format_table(kind: str, q: int, fmt: str, bound: int = DEFAULT_BOUND) -> str:
    F = field_of_order(q, bound=bound)
    cols, rows = table_rows(kind, q, bound)
    if fmt == "json":
        doc = {"field": F.header(), "table": kind, "n": F.n,
               "rows": [dict(zip(cols, r)) for r in rows]}
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(_header_lines(F.header())[0] + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([" ".join(map(str, c)) if isinstance(c, list) else c for c in r])
    return buf.getvalue()


def read_binom_table(text: str, fmt: str) -> dict:
    """Parse a dumped binom table back into {(a, b): CycNum}."""
    if fmt == "json":
        doc = json.loads(text)
        n = doc["n"]
        return {(r["a"], r["b"]): CycNum(n, tuple(r["coeffs"])) for r in doc["rows"]}
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    q = int(re.match(r"# F_(\d+):", text).group(1))
    out = {}
    for r in csv.DictReader(lines):
        out[int(r["a"]), int(r["b"])] = CycNum(q - 1, tuple(int(c) for c in r["coeffs"].split()))
    return out


def cmd_table(args, stdout=sys.stdout) -> int:
    text = format_table(args.kind, args.q, args.format, bound=args.bound)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ffappell", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check registry identities")
    v.add_argument("--q", type=int)
    v.add_argument("--q-min", type=int)
    v.add_argument("--q-max", type=int)
    v.add_argument("--identities", default="all", help="'all' or comma-separated ids")
    v.add_argument("--mode", choices=("exact", "float"), default="exact")
    v.add_argument("--strategy", choices=("auto", "exhaustive", "sampled"), default="auto",
                   help="auto: exhaustive for q <= 5, sampled otherwise")
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out")
    v.add_argument("--format", choices=("json", "csv"))
    v.add_argument("--budget", type=int, default=None)
    v.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    v.add_argument("--jobs", type=int, default=1)

    e = sub.add_parser("eval", help="evaluate one function")
    e.add_argument("function", choices=sorted(EVAL_PARAMS))
    e.add_argument("--q", type=int, required=True)
    for name in ("A", "B", "Bp", "C", "Cp", "x", "y"):
        e.add_argument(f"--{name}", type=int)
    e.add_argument("--numer", help="3f2 upper characters, e.g. 1,2,3")
    e.add_argument("--denom", help="3f2 lower characters, e.g. 0,1")
    e.add_argument("--float", action="store_true")
    e.add_argument("--bound", type=int, default=DEFAULT_BOUND)

    t = sub.add_parser("table", help="dump a table")
    t.add_argument("kind", choices=("binom", "dlog", "chars"))
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--out")
    t.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    return ap


def _verify_config(args) -> RunConfig:
    if args.q is not None:
        if args.q_min is not None or args.q_max is not None:
            raise UsageError("use either --q or --q-min/--q-max")
        qs = [args.q]
    elif args.q_min is not None and args.q_max is not None:
        if args.q_min > args.q_max:
            raise UsageError("--q-min exceeds --q-max")
        qs = [q for q in range(args.q_min, args.q_max + 1) if _is_prime_power(q)]
        if not qs:
            raise UsageError("no prime powers in the requested range")
    else:
        raise UsageError("give --q or both --q-min and --q-max")
    if args.identities == "all":
        ids = None
    else:
        ids = [i.strip() for i in args.identities.split(",") if i.strip()]
        known = {s.id for s in registry()}
        unknown = [i for i in ids if i not in known]
        if unknown:
            raise UsageError(f"unknown identities: {', '.join(unknown)}")
    fmt = args.format or ("csv" if args.out and args.out.endswith(".csv") else "json")
    return RunConfig(
        q_values=qs, ids=ids, mode=args.mode, strategy=args.strategy, samples=args.samples,
        seed=args.seed, out=args.out, fmt=fmt,
        budget=args.budget if args.budget is not None else _budget_default(),
        bound=args.bound, jobs=max(1, args.jobs),
    )


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            return cmd_verify(_verify_config(args), stdout)
        if args.command == "eval":
            return cmd_eval(args, stdout)
        return cmd_table(args, stdout)
    except (UsageError, hyper.ArityMismatch) as exc:
        print(f"ffappell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FieldError as exc:
        print(f"ffappell: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_LIMITS


if __name__ == "__main__":
    sys.exit(main())

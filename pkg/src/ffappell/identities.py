"""Registry of the finite-field identities and an exact checker for them.

Each ``IdentitySpec`` evaluates both sides on raw parameters: characters are
exponents mod n (so AB is ``A + B`` and B-bar is ``-B``), elements are field
indices. Values are group-ring accumulators, compared exactly after
projection to Z[zeta_n].
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .appell import f2_charsum_gr, f2_gr
from .cyclo import GR
from .ff_core import DEFAULT_BOUND, FieldError, field_of_order
from .hyper import binomial_table

DEFAULT_BUDGET = 10**7
CHAR, ELEM = "character", "element"


class BudgetExceeded(RuntimeError):
    def __init__(self, size, budget):
        super().__init__(f"domain size {size} exceeds evaluation budget {budget}")
        self.size = size
        self.budget = budget


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    params: tuple  # ((name, kind), ...)
    lhs: Callable
    rhs: Callable
    citation: str
    domain: Callable | None = None
    quarantined: bool = False
    note: str = ""

    def admits(self, F, p: dict) -> bool:
        return self.domain is None or bool(self.domain(F, **p))


@dataclass
class VerifyReport:
    identity: str
    q: int
    mode: str
    strategy: str
    seed: int | None
    tuples_checked: int = 0
    rejected: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    quarantined: bool = False
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and not self.failures

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "q": self.q,
            "mode": self.mode,
            "strategy": self.strategy,
            "seed": self.seed,
            "tuples_checked": self.tuples_checked,
            "rejected": self.rejected,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
            "quarantined": self.quarantined,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _chars(*names):
    return tuple((n, CHAR) for n in names)


def _elems(*names):
    return tuple((n, ELEM) for n in names)


# ---------------------------------------------------------------------------
# left/right sides. Short aliases: bt.ch(m, z) = chi_m(z), bt.dc = delta on
# characters, bt.de = delta on elements, bt.eps = trivial character on F_q.
# ---------------------------------------------------------------------------

def _m1(bt):
    return bt.field.neg(1)


def _greene_eps_rhs(bt, A, C, x):
    F, n = bt.field, bt.n
    return (
        bt.binom(C, A) * bt.ch(A, _m1(bt)) * bt.ch(-C, x) * bt.ch(C - A, F.one_minus(x))
        - bt.ch(C, _m1(bt)) * bt.eps(x)
        + bt.ch(A, _m1(bt)) * (n * bt.de(F.one_minus(x)) * bt.dc(C - A))
    )


def _greene_topbottom_rhs(bt, A, B, x):
    F, n = bt.field, bt.n
    return (
        bt.binom(B, A) * bt.ch(-B, F.one_minus(x)) * bt.eps(x)
        - bt.ch(-A, F.neg(x))
        + bt.ch(A, _m1(bt)) * (n * bt.de(F.one_minus(x)) * bt.dc(B))
    )


def _greene_3f2_rhs(bt, A, B, C, D, x):
    F, n = bt.field, bt.n
    return (
        bt.binom(B, A) * bt.f21(B, C, D, x)
        - bt.ch(-A, F.neg(x)) * bt.binom(C - A, D - A)
        + bt.ch(A, _m1(bt)) * bt.ch(-D, x) * bt.ch(D - C, F.one_minus(x)) * (n * bt.dc(B))
    )


def _greene_211_lhs(bt, A, B, x):
    n, chis = bt.n, bt._chis
    return GR(bt._charsum([bt.T[(A + chis) % n, (B + chis) % n]], x))


def _thm32a_rhs(bt, A, B, C, Cp, x, y, derived=False):
    F, n = bt.field, bt.n
    omy = F.one_minus(y)
    if derived:
        tail = bt.ch(B + Cp - A, omy) * bt.ch(C - B, F.sub(omy, x))
    else:
        tail = bt.ch(2 * C - B, omy) * bt.ch(B - C, F.sub(omy, x))
    return (
        -(bt.ch(Cp, _m1(bt)) * bt.f21(A, B, C, x)) * bt.eps(y)
        + bt.ch(-Cp, y) * bt.ch(Cp - A, omy) * bt.binom(A - Cp, A) * bt.f21(A - Cp, B, C, F.div(x, omy))
        + bt.ch(A, _m1(bt)) * bt.ch(-C, x) * bt.ch(-Cp, y) * tail * (n * bt.dc(A - Cp))
    )


def _thm32b_rhs(bt, A, Bp, C, Cp, x, y, derived=False):
    F, n = bt.field, bt.n
    omx = F.one_minus(x)
    if derived:
        tail = bt.ch(Bp + C - A, omx) * bt.ch(Cp - Bp, F.sub(omx, y))
    else:
        tail = bt.ch(2 * Cp - Bp, omx) * bt.ch(Bp - Cp, F.sub(omx, y))
    return (
        -(bt.ch(C, _m1(bt)) * bt.f21(A, Bp, Cp, y)) * bt.eps(x)
        + bt.ch(-C, x) * bt.ch(C - A, omx) * bt.binom(A - C, A) * bt.f21(A - C, Bp, Cp, F.div(y, omx))
        + bt.ch(A, _m1(bt)) * bt.ch(-Cp, y) * bt.ch(-C, x) * tail * (n * bt.dc(A - C))
    )


def _thm33_rhs(bt, A, B, Bp, Cp, x, y):
    F, n = bt.field, bt.n
    omx = F.one_minus(x)
    return (
        -(bt.ch(-A, omx) * bt.f21(A, Bp, Cp, F.div(y, omx))) * bt.eps(x)
        + bt.ch(-B, x) * bt.binom(A - B, -B) * bt.f21(A - B, Bp, Cp, y)
        + bt.ch(-A, F.neg(x)) * bt.ch(-Cp, y) * bt.ch(Cp - Bp, F.one_minus(y)) * (n * bt.dc(A - B))
    )


def _thm34_rhs(bt, A, B, Bp, C, x, y, bare=True):
    F, n = bt.field, bt.n
    omy = F.one_minus(y)
    term = bt.ch(-A, F.neg(y)) * bt.ch(-C, x) * bt.ch(C - B, F.one_minus(x))
    out = (
        -(bt.ch(-A, omy) * bt.f21(A, B, C, F.div(x, omy))) * bt.eps(y)
        + term * (-1 + n * bt.dc(A - Bp))
        + bt.ch(-Bp, y) * bt.binom(A - Bp, -Bp) * bt.f21(A - Bp, B, C, x)
    )
    return out + term if bare else out


def _thm35_t1_rhs(bt, A, B, Bp, C, Cp, x, y):
    F = bt.field
    omx = F.one_minus(x)
    x2, y2 = F.neg(F.div(x, omx)), F.div(y, omx)
    return bt.ch(C, _m1(bt)) * bt.ch(-A, omx) * f2_gr(bt, A, C - B, Bp, C, Cp, x2, y2)


def _thm35_t2_rhs(bt, A, B, Bp, C, Cp, x, y):
    F = bt.field
    omy = F.one_minus(y)
    x2, y2 = F.div(x, omy), F.neg(F.div(y, omy))
    return bt.ch(Cp, _m1(bt)) * bt.ch(-A, omy) * f2_gr(bt, A, B, Cp - Bp, C, Cp, x2, y2)


def _thm35_t3_rhs(bt, A, B, Bp, C, Cp, x, y):
    F = bt.field
    w = F.sub(F.one_minus(x), y)
    x2, y2 = F.neg(F.div(x, w)), F.neg(F.div(y, w))
    return bt.ch(C + Cp, _m1(bt)) * bt.ch(-A, w) * f2_gr(bt, A, C - B, Cp - Bp, C, Cp, x2, y2)


def _thm36_rhs(bt, A, B, Bp, C, Cp, x):
    F = bt.field
    omx = F.one_minus(x)
    z = F.neg(F.div(x, omx))
    return bt.ch(C + Bp + Cp, _m1(bt)) * bt.ch(-A, omx) * bt.f32(A, C - B, A - Cp, C, A + Bp - Cp, z)


def _prop41_rhs(bt, A, B, C):
    n = bt.n
    return (
        bt.binom(C, B) * bt.binom(C - B, A - B)
        - bt.ch(B, _m1(bt)) * (n * bt.dc(A))
        + bt.ch(A + B, _m1(bt)) * (n * bt.dc(B - C))
    )


def _thm42_lhs(bt, A, B, Bp, C, Cp, x, y, t):
    total = GR.zero(bt.n)
    for th in range(bt.n):
        total = total + bt.binom(A + th, th) * f2_gr(bt, A + th, B, Bp, C, Cp, x, y) * bt.ch(th, t)
    return total.exact_div(bt.n)


def _thm42_rhs(bt, A, B, Bp, C, Cp, x, y, t):
    F = bt.field
    omt = F.one_minus(t)
    tail = bt.ch(-Cp, y) * bt.ch(Cp - Bp, F.one_minus(y))
    out = (
        bt.ch(-A, omt) * f2_gr(bt, A, B, Bp, C, Cp, F.div(x, omt), F.div(y, omt))
        - bt.ch(-A, F.neg(t)) * tail * bt.f21(A, B, C, F.neg(F.div(x, t)))
        - bt.ch(-A, F.neg(t)) * (bt.binom(B, C) * bt.binom(Bp, Cp) * bt.eps(y) - f2_gr(bt, 0, B, Bp, C, Cp, x, y))
    )
    if x == 0:
        # A-bar(-x) = 0 kills the last term, whose argument -t/x is undefined
        return out
    return out + bt.ch(B + C, _m1(bt)) * bt.ch(-A, F.neg(x)) * tail * bt.f21(A, A - C, A - B, F.neg(F.div(t, x)))


def _thm43a_lhs(bt, A, B, Bp, C, Cp, x, y, t):
    total = GR.zero(bt.n)
    for th in range(bt.n):
        total = total + bt.binom(B - C + th, th) * f2_gr(bt, A, B + th, Bp, C, Cp, x, y) * bt.ch(th, t)
    return total.exact_div(bt.n)


def _thm43a_rhs(bt, A, B, Bp, C, Cp, x, y, t):
    F = bt.field
    omt, omx = F.one_minus(t), F.one_minus(x)
    return (
        bt.ch(-B, omt) * f2_gr(bt, A, B, Bp, C, Cp, F.div(x, omt), y) * bt.eps(t)
        - bt.ch(C - B, F.neg(t)) * bt.ch(-A, omx) * bt.f21(A, Bp, Cp, F.div(y, omx)) * bt.eps(x)
    )


def _thm43b_lhs(bt, A, B, Bp, C, Cp, x, y, t):
    total = GR.zero(bt.n)
    for th in range(bt.n):
        total = total + bt.binom(Bp - Cp + th, th) * f2_gr(bt, A, B, Bp + th, C, Cp, x, y) * bt.ch(th, t)
    return total.exact_div(bt.n)


def _thm43b_rhs(bt, A, B, Bp, C, Cp, x, y, t):
    F = bt.field
    omt, omy = F.one_minus(t), F.one_minus(y)
    return (
        bt.ch(-Bp, omt) * f2_gr(bt, A, B, Bp, C, Cp, x, F.div(y, omt)) * bt.eps(t)
        - bt.ch(Cp - Bp, F.neg(t)) * bt.ch(-A, omy) * bt.f21(A, B, C, F.div(x, omy)) * bt.eps(y)
    )


F2P = _chars("A", "B", "Bp", "C", "Cp")


def _registry() -> list[IdentitySpec]:
    m1 = _m1
    return [
        IdentitySpec(
            "binom-sym-1", _chars("A", "B"),
            lambda bt, A, B: bt.binom(A, B),
            lambda bt, A, B: bt.binom(A, A - B),
            "{A choose B} = {A choose A B-bar}",
        ),
        IdentitySpec(
            "binom-sym-2", _chars("A", "B"),
            lambda bt, A, B: bt.binom(A, B),
            lambda bt, A, B: bt.binom(B - A, B) * bt.ch(B, m1(bt)),
            "{A choose B} = {B A-bar choose B} B(-1)",
        ),
        IdentitySpec(
            "binom-sym-3", _chars("A", "B"),
            lambda bt, A, B: bt.binom(A, B),
            lambda bt, A, B: bt.binom(-B, -A) * bt.ch(A + B, m1(bt)),
            "{A choose B} = {B-bar choose A-bar} AB(-1)",
        ),
        IdentitySpec(
            "binom-sym-4", _chars("A", "B"),
            lambda bt, A, B: bt.binom(A, B),
            lambda bt, A, B: GR.const(bt.n, -1 + bt.n * bt.dc(A)),
            "{A choose eps} = {A choose A} = -1 + (q-1) delta(A); B ranges over {eps, A}",
            domain=lambda F, A, B: B == 0 or B == A,
        ),
        IdentitySpec(
            "binom-theorem", _chars("A") + _elems("x"),
            lambda bt, A, x: bt.ch(A, bt.field.add(1, x)),
            lambda bt, A, x: bt.binomial_theorem_rhs(A, x),
            "binomial theorem: A(1+x) = delta(x) + (1/(q-1)) sum_chi {A choose chi} chi(x)",
        ),
        IdentitySpec(
            "trinomial", _chars("A") + _elems("x", "y"),
            lambda bt, A, x, y: bt.ch(A, bt.field.add(bt.field.add(1, x), y)),
            lambda bt, A, x, y: bt.trinomial_rhs(A, x, y),
            "trinomial theorem: A(1+x+y) as a double character sum over {A choose chi}{A chi-bar choose lambda}",
        ),
        IdentitySpec(
            "f21-def-eq-charsum", _chars("A", "B", "C") + _elems("x"),
            lambda bt, A, B, C, x: bt.f21(A, B, C, x),
            lambda bt, A, B, C, x: bt.f21cs(A, B, C, x),
            "2F1(A,B;C|x) = (1/(q-1)) sum_chi {A chi choose chi}{B chi choose C chi} chi(x) (Greene)",
        ),
        IdentitySpec(
            "f21-at-1", _chars("A", "B", "C"),
            lambda bt, A, B, C: bt.f21(A, B, C, 1),
            lambda bt, A, B, C: bt.ch(A, m1(bt)) * bt.binom(B, C - A),
            "2F1(A,B;C|1) = A(-1){B choose A-bar C} (Greene)",
        ),
        IdentitySpec(
            "greene-2f1-eps", _chars("A", "C") + _elems("x"),
            lambda bt, A, C, x: bt.f21(A, 0, C, x),
            _greene_eps_rhs,
            "closed form of 2F1(A, eps; C | x) (Greene)",
        ),
        IdentitySpec(
            "greene-2f1-topbottom", _chars("A", "B") + _elems("x"),
            lambda bt, A, B, x: bt.f21(A, B, A, x),
            _greene_topbottom_rhs,
            "closed form of 2F1(A, B; A | x) (Greene)",
        ),
        IdentitySpec(
            "greene-3f2-reduction", _chars("A", "B", "C", "D") + _elems("x"),
            lambda bt, A, B, C, D, x: bt.f32(A, B, C, A, D, x),
            _greene_3f2_rhs,
            "3F2(A,B,C; A,D | x) in terms of 2F1(B,C; D | x) (Greene)",
        ),
        IdentitySpec(
            "greene-211", _chars("A", "B") + _elems("x"),
            _greene_211_lhs,
            lambda bt, A, B, x: bt.ch(-B, x) * bt.ch(B - A, bt.field.one_minus(x)) * bt.n,
            "sum_chi {A chi choose B chi} chi(x) = (q-1) B-bar(x) A-bar B(1-x) (Greene)",
        ),
        IdentitySpec(
            "f2-def-eq-charsum", F2P + _elems("x", "y"),
            lambda bt, A, B, Bp, C, Cp, x, y: f2_gr(bt, A, B, Bp, C, Cp, x, y),
            lambda bt, A, B, Bp, C, Cp, x, y: f2_charsum_gr(bt, A, B, Bp, C, Cp, x, y),
            "F2 equals its double character sum plus the v = 1/y boundary term",
        ),
        IdentitySpec(
            "f2-symmetry", F2P + _elems("x", "y"),
            lambda bt, A, B, Bp, C, Cp, x, y: f2_gr(bt, A, B, Bp, C, Cp, x, y),
            lambda bt, A, B, Bp, C, Cp, x, y: f2_gr(bt, A, Bp, B, Cp, C, y, x),
            "F2(A;B,B';C,C';x,y) = F2(A;B',B;C',C;y,x)",
        ),
        IdentitySpec(
            "f2-at-y1", F2P + _elems("x"),
            lambda bt, A, B, Bp, C, Cp, x: f2_gr(bt, A, B, Bp, C, Cp, x, 1),
            lambda bt, A, B, Bp, C, Cp, x: bt.ch(Bp + Cp, m1(bt)) * bt.f32(A, B, A - Cp, C, A + Bp - Cp, x),
            "F2 at y = 1 equals B'C'(-1) 3F2(A, B, A C'-bar; C, A B' C'-bar | x)",
        ),
        IdentitySpec(
            "f2-at-x1", F2P + _elems("y"),
            lambda bt, A, B, Bp, C, Cp, y: f2_gr(bt, A, B, Bp, C, Cp, 1, y),
            lambda bt, A, B, Bp, C, Cp, y: bt.ch(B + C, m1(bt)) * bt.f32(A, Bp, A - C, Cp, A + B - C, y),
            "F2 at x = 1 equals BC(-1) 3F2(A, B', A C-bar; C', A B C-bar | y)",
            note="stated without a side condition, mirroring the y = 1 case; none is needed",
        ),
        IdentitySpec(
            "thm32-a", _chars("A", "B", "C", "Cp") + _elems("x", "y"),
            lambda bt, A, B, C, Cp, x, y: f2_gr(bt, A, B, 0, C, Cp, x, y),
            _thm32a_rhs,
            "reduction of F2(A; B, eps; C, C'; x, y) to 2F1 values, y != 1",
            domain=lambda F, A, B, C, Cp, x, y: y != 1,
            quarantined=True,
            note="fails whenever A = C' (the delta term is active); as printed the delta term carries "
            "B-bar C^2(1-y) B C-bar(1-x-y). The variant thm32-a-derived, with A-bar B C'(1-y) B-bar C(1-x-y), "
            "verifies exhaustively for q <= 7 (empirical finding)",
        ),
        IdentitySpec(
            "thm32-b", _chars("A", "Bp", "C", "Cp") + _elems("x", "y"),
            lambda bt, A, Bp, C, Cp, x, y: f2_gr(bt, A, 0, Bp, C, Cp, x, y),
            _thm32b_rhs,
            "reduction of F2(A; eps, B'; C, C'; x, y) to 2F1 values, x != 1",
            domain=lambda F, A, Bp, C, Cp, x, y: x != 1,
            quarantined=True,
            note="fails whenever A = C, mirror image of thm32-a; the variant thm32-b-derived "
            "verifies exhaustively for q <= 7 (empirical finding)",
        ),
        IdentitySpec(
            "thm33-bailey", _chars("A", "B", "Bp", "Cp") + _elems("x", "y"),
            lambda bt, A, B, Bp, Cp, x, y: f2_gr(bt, A, B, Bp, B, Cp, x, y),
            _thm33_rhs,
            "analogue of Bailey's reduction of F2(a; b, b'; b, c'; x, y), x != 1",
            domain=lambda F, A, B, Bp, Cp, x, y: x != 1,
        ),
        IdentitySpec(
            "thm34-bprime", _chars("A", "B", "Bp", "C") + _elems("x", "y"),
            lambda bt, A, B, Bp, C, x, y: f2_gr(bt, A, B, Bp, C, Bp, x, y),
            _thm34_rhs,
            "reduction of F2(A; B, B'; C, B'; x, y) to 2F1 values, y != 1",
            domain=lambda F, A, B, Bp, C, x, y: y != 1,
            note="kept as printed, with the standalone A-bar(-y) C-bar(x) B-bar C(1-x) term; it verifies. "
            "Dropping that term (thm34-bprime-variant) fails",
        ),
        IdentitySpec(
            "thm35-t1", F2P + _elems("x", "y"),
            lambda bt, A, B, Bp, C, Cp, x, y: f2_gr(bt, A, B, Bp, C, Cp, x, y),
            _thm35_t1_rhs,
            "F2 transformation from u -> 1-u, x != 1",
            domain=lambda F, A, B, Bp, C, Cp, x, y: x != 1,
        ),
        IdentitySpec(
            "thm35-t2", F2P + _elems("x", "y"),
            lambda bt, A, B, Bp, C, Cp, x, y: f2_gr(bt, A, B, Bp, C, Cp, x, y),
            _thm35_t2_rhs,
            "F2 transformation from v -> 1-v, y != 1",
            domain=lambda F, A, B, Bp, C, Cp, x, y: y != 1,
        ),
        IdentitySpec(
            "thm35-t3", F2P + _elems("x", "y"),
            lambda bt, A, B, Bp, C, Cp, x, y: f2_gr(bt, A, B, Bp, C, Cp, x, y),
            _thm35_t3_rhs,
            "F2 transformation from u -> 1-u and v -> 1-v, x + y != 1",
            domain=lambda F, A, B, Bp, C, Cp, x, y: F.add(x, y) != 1,
        ),
        IdentitySpec(
            "thm36-xy1", F2P + _elems("x"),
            lambda bt, A, B, Bp, C, Cp, x: f2_gr(bt, A, B, Bp, C, Cp, x, bt.field.one_minus(x)),
            _thm36_rhs,
            "F2 on the line x + y = 1 as a 3F2, x != 1",
            domain=lambda F, A, B, Bp, C, Cp, x: x != 1,
        ),
        IdentitySpec(
            "prop41-binom-product", _chars("A", "B", "C"),
            lambda bt, A, B, C: bt.binom(A, B) * bt.binom(C, A),
            _prop41_rhs,
            "{A choose B}{C choose A} = {C choose B}{C B-bar choose A B-bar} + delta corrections (Greene)",
        ),
        IdentitySpec(
            "thm42-genfun", F2P + _elems("x", "y", "t"),
            _thm42_lhs,
            _thm42_rhs,
            "generating function sum_theta {A theta choose theta} F2(A theta; ...) theta(t), "
            "x != 0, t not in {0, 1}",
            note="x = 0 fails (see thm42-genfun-x0), so the x != 0 restriction is necessary",
            domain=lambda F, A, B, Bp, C, Cp, x, y, t: x != 0 and t not in (0, 1),
        ),
        IdentitySpec(
            "thm43-a", F2P + _elems("x", "y", "t"),
            _thm43a_lhs,
            _thm43a_rhs,
            "generating function over theta in the B slot, x != 1, t != 1",
            domain=lambda F, A, B, Bp, C, Cp, x, y, t: x != 1 and t != 1,
        ),
        IdentitySpec(
            "thm43-b", F2P + _elems("x", "y", "t"),
            _thm43b_lhs,
            _thm43b_rhs,
            "generating function over theta in the B' slot, y != 1, t != 1",
            domain=lambda F, A, B, Bp, C, Cp, x, y, t: y != 1 and t != 1,
        ),
    ]


_REGISTRY = _registry()
_BY_ID = {s.id: s for s in _REGISTRY}

# Candidate readings of ambiguous statements; checked but never part of the registry.
_VARIANTS = {
    "thm34-bprime-variant": IdentitySpec(
        "thm34-bprime-variant", _chars("A", "B", "Bp", "C") + _elems("x", "y"),
        lambda bt, A, B, Bp, C, x, y: f2_gr(bt, A, B, Bp, C, Bp, x, y),
        lambda bt, A, B, Bp, C, x, y: _thm34_rhs(bt, A, B, Bp, C, x, y, bare=False),
        "thm34-bprime with the standalone A-bar(-y) C-bar(x) B-bar C(1-x) term removed",
        domain=lambda F, A, B, Bp, C, x, y: y != 1,
    ),
    "thm42-genfun-x0": IdentitySpec(
        "thm42-genfun-x0", F2P + _elems("x", "y", "t"),
        _thm42_lhs,
        _thm42_rhs,
        "thm42-genfun restricted to x = 0, outside its stated domain",
        domain=lambda F, A, B, Bp, C, Cp, x, y, t: x == 0 and t not in (0, 1),
    ),
    "thm32-a-derived": IdentitySpec(
        "thm32-a-derived", _chars("A", "B", "C", "Cp") + _elems("x", "y"),
        lambda bt, A, B, C, Cp, x, y: f2_gr(bt, A, B, 0, C, Cp, x, y),
        lambda bt, A, B, C, Cp, x, y: _thm32a_rhs(bt, A, B, C, Cp, x, y, derived=True),
        "thm32-a with delta term (q-1)A(-1)C-bar(x)C'-bar(y) A-bar B C'(1-y) B-bar C(1-x-y) delta(A C'-bar)",
        domain=lambda F, A, B, C, Cp, x, y: y != 1,
    ),
    "thm32-b-derived": IdentitySpec(
        "thm32-b-derived", _chars("A", "Bp", "C", "Cp") + _elems("x", "y"),
        lambda bt, A, Bp, C, Cp, x, y: f2_gr(bt, A, 0, Bp, C, Cp, x, y),
        lambda bt, A, Bp, C, Cp, x, y: _thm32b_rhs(bt, A, Bp, C, Cp, x, y, derived=True),
        "thm32-b with delta term (q-1)A(-1)C'-bar(y)C-bar(x) A-bar B' C(1-x) B'-bar C'(1-x-y) delta(A C-bar)",
        domain=lambda F, A, Bp, C, Cp, x, y: x != 1,
    ),
}


def registry() -> list[IdentitySpec]:
    return list(_REGISTRY)


def variants() -> list[IdentitySpec]:
    return list(_VARIANTS.values())


def get(identity_id: str) -> IdentitySpec:
    try:
        return _BY_ID.get(identity_id) or _VARIANTS[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def _ranges(spec: IdentitySpec, q: int):
    return [range(q - 1) if kind == CHAR else range(q) for _, kind in spec.params]


def domain_size(spec: IdentitySpec, q: int) -> int:
    return math.prod(len(r) for r in _ranges(spec, q))


def _sampled(spec, F, q, seed, samples):
    """Draw full assignments uniformly, reject by domain until `samples` accepted."""
    names = [name for name, _ in spec.params]
    sizes = [len(r) for r in _ranges(spec, q)]
    rng = random.Random(f"{seed}:{spec.id}:{q}")
    accepted, rejected = [], 0
    max_draws = 1000 * samples
    while len(accepted) < samples and len(accepted) + rejected < max_draws:
        p = dict(zip(names, (rng.randrange(s) for s in sizes)))
        if spec.admits(F, p):
            accepted.append(p)
        else:
            rejected += 1
    return accepted, rejected


def _sides_agree(lhs: GR, rhs: GR, mode: str) -> bool:
    if mode == "float":
        a, b = lhs.to_complex(), rhs.to_complex()
        return abs(a - b) < 1e-6 * (1 + abs(a))
    return (lhs - rhs).is_zero()


def check_identity(
    spec: IdentitySpec,
    q: int,
    strategy: str = "exhaustive",
    seed: int | None = 0,
    samples: int = 1000,
    mode: str = "exact",
    budget: int = DEFAULT_BUDGET,
    bound: int = DEFAULT_BOUND,
) -> VerifyReport:
    """Check one identity at one q; raises FieldError or BudgetExceeded."""
    if strategy not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    t0 = time.perf_counter()
    F = field_of_order(q, bound=bound)
    bt = binomial_table(F)
    report = VerifyReport(
        spec.id, q, mode, strategy, seed, quarantined=spec.quarantined,
    )
    if strategy == "exhaustive":
        size = domain_size(spec, q)
        if size > budget:
            raise BudgetExceeded(size, budget)
        names = [name for name, _ in spec.params]
        todo = (dict(zip(names, c)) for c in itertools.product(*_ranges(spec, q)))
    else:
        todo, report.rejected = _sampled(spec, F, q, seed, samples)

    failed = set()
    for p in todo:
        if strategy == "exhaustive" and not spec.admits(F, p):
            report.rejected += 1
            continue
        report.tuples_checked += 1
        key = tuple(p.values())
        if key in failed:
            continue
        lhs, rhs = spec.lhs(bt, **p), spec.rhs(bt, **p)
        if not _sides_agree(lhs, rhs, mode):
            failed.add(key)
            report.failures.append({"params": p, "lhs": lhs.reduce().to_list(), "rhs": rhs.reduce().to_list()})
    report.failures.sort(key=lambda f: tuple(f["params"].values()))
    report.elapsed_ms = round((time.perf_counter() - t0) * 1000, 3)
    return report


def auto_strategy(q: int) -> str:
    return "exhaustive" if q <= 5 else "sampled"


def _run_one(task):
    ident, q, strategy, seed, samples, mode, budget, bound = task
    spec = get(ident)
    strat = auto_strategy(q) if strategy == "auto" else strategy
    try:
        return check_identity(spec, q, strat, seed, samples, mode, budget, bound)
    except (FieldError, BudgetExceeded, ArithmeticError) as exc:
        return VerifyReport(
            ident, q, mode, strat, seed, quarantined=spec.quarantined, error=f"{type(exc).__name__}: {exc}",
        )


def check_all(
    q_list,
    strategy: str = "auto",
    seed: int = 0,
    samples: int = 1000,
    mode: str = "exact",
    ids=None,
    budget: int = DEFAULT_BUDGET,
    bound: int = DEFAULT_BOUND,
    jobs: int = 1,
) -> list[VerifyReport]:
    """Every selected identity at every q; errors land in the reports."""
    ids = [s.id for s in _REGISTRY] if ids is None else list(ids)
    tasks = [(i, q, strategy, seed, samples, mode, budget, bound) for q in q_list for i in ids]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]


def batch_ok(reports) -> bool:
    return all(r.passed or r.quarantined for r in reports)

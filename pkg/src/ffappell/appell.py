"""Finite-field Appell functions F1 and F2.

    F1(A; B, B'; C; x, y) = eps(xy) AC(-1) sum_u A(u) A-bar C(1-u) B-bar(1-ux) B'-bar(1-uy)

    F2(A; B, B'; C, C'; x, y)
        = eps(xy) BB'CC'(-1) sum_{u,v} B(u) B'(v) B-bar C(1-u) B'-bar C'(1-v) A-bar(1-ux-vy)

F2 also has a double character-sum form plus a boundary term, the
contribution of v = 1/y; ``f2_charsum`` evaluates that form.
"""

from __future__ import annotations

import numpy as np

from .chars import Character
from .cyclo import GR, CycNum, conv, shift
from .hyper import BinomialTable, _table


def f1_gr(bt: BinomialTable, a, b, bp, c, x, y) -> GR:
    n, F = bt.n, bt.field
    if x == 0 or y == 0:
        return GR.zero(n)
    L, L1 = bt.L, bt.L1
    Lx = bt.log[F.one_minus_table[F.mul_table[x]]]
    Ly = bt.log[F.one_minus_table[F.mul_table[y]]]
    mask = (L >= 0) & (L1 >= 0) & (Lx >= 0) & (Ly >= 0)
    E = (a * L + (c - a) * L1 - b * Lx - bp * Ly)[mask] % n
    v = np.bincount(E, minlength=n).astype(bt.dtype)
    return GR(np.roll(v, ((a + c) * bt.lm1) % n))


def f2_gr(bt: BinomialTable, a, b, bp, c, cp, x, y) -> GR:
    """Defining double sum, memoized per table."""
    n = bt.n
    key = (a % n, b % n, bp % n, c % n, cp % n, x, y)
    hit = bt._f2.get(key)
    if hit is not None:
        return hit
    if x == 0 or y == 0:
        out = GR.zero(n)
    else:
        F = bt.field
        L, L1 = bt.L, bt.L1
        # 1 - ux - vy over the (u, v) grid
        w = F.one_minus_table[F.add_table[F.mul_table[x][:, None], F.mul_table[y][None, :]]]
        Lw = bt.log[w]
        eu = b * L + (c - b) * L1
        ev = bp * L + (cp - bp) * L1
        ok_u = (L >= 0) & (L1 >= 0)
        ok_v = ok_u
        mask = ok_u[:, None] & ok_v[None, :] & (Lw >= 0)
        E = (eu[:, None] + ev[None, :] - a * Lw)[mask] % n
        v = np.bincount(E, minlength=n).astype(bt.dtype)
        out = GR(np.roll(v, ((b + bp + c + cp) * bt.lm1) % n))
    out.v.setflags(write=False)
    bt._f2[key] = out
    return out


def f2_boundary_gr(bt: BinomialTable, a, b, bp, c, cp, x, y) -> GR:
    """A-bar(-x) C'-bar(y) B'-bar C'(1-y) {A-bar B choose B C-bar}."""
    F = bt.field
    mono = bt.ch(-a, F.neg(x)) * bt.ch(-cp, y) * bt.ch(cp - bp, F.one_minus(y))
    return mono * bt.binom(b - a, b - c)


def f2_charsum_gr(bt: BinomialTable, a, b, bp, c, cp, x, y) -> GR:
    n, T, chis = bt.n, bt.T, bt._chis
    if x == 0 or y == 0:
        # every term of the double sum carries chi(0) or lambda(0)
        double = GR.zero(n)
    else:
        # P[chi, lambda] = {A chi, chi}{A chi lambda, lambda}{B chi, C chi}{B' lambda, C' lambda}
        left = conv(T[(a + chis) % n, chis], T[(b + chis) % n, (c + chis) % n])
        mid = T[(a + chis[:, None] + chis[None, :]) % n, chis[None, :]]
        right = T[(bp + chis) % n, (cp + chis) % n]
        P = conv(conv(left[:, None], mid), right[None, :])
        s = chis[:, None] * int(bt.log[x]) + chis[None, :] * int(bt.log[y])
        double = GR(shift(P, s).sum(axis=(0, 1))).exact_div(n * n)
    boundary = f2_boundary_gr(bt, a, b, bp, c, cp, x, y)
    if x == 0 or y == 0:
        # the boundary term carries A-bar(-x) and C'-bar(y), so F2 is 0 here too
        assert boundary.is_zero()
    return double + boundary


def f1_def(A: Character, B: Character, Bp: Character, C: Character, x: int, y: int) -> CycNum:
    bt = _table(A, B, Bp, C)
    return f1_gr(bt, A.m, B.m, Bp.m, C.m, x, y).reduce()


def f2_def(A, B, Bp, C, Cp, x: int, y: int) -> CycNum:
    bt = _table(A, B, Bp, C, Cp)
    return f2_gr(bt, A.m, B.m, Bp.m, C.m, Cp.m, x, y).reduce()


def f2_charsum(A, B, Bp, C, Cp, x: int, y: int) -> CycNum:
    bt = _table(A, B, Bp, C, Cp)
    return f2_charsum_gr(bt, A.m, B.m, Bp.m, C.m, Cp.m, x, y).reduce()


def f2_boundary_term(A, B, Bp, C, Cp, x: int, y: int) -> CycNum:
    bt = _table(A, B, Bp, C, Cp)
    return f2_boundary_gr(bt, A.m, B.m, Bp.m, C.m, Cp.m, x, y).reduce()

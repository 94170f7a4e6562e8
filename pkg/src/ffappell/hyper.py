"""Jacobi sums, binomial coefficients and hypergeometric functions over F_q.

All functions use the x q normalization: {A choose B} = B(-1) J(A, B-bar),
and 2F1 is q times Greene's function. Greene's values are obtained by
dividing a reported value by q (see ``greene_2f1``).

The public functions take ``Character`` objects and integer field elements
and return ``CycNum``. The ``BinomialTable`` methods do the same work on raw
character exponents and return group-ring accumulators (``GR``); those are
what the identity checker uses.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .chars import Character, MixedFields, char_exponent
from .cyclo import GR, CycNum, conv, gr_dtype, shift
from .ff_core import FieldTable


class ArityMismatch(ValueError):
    pass


class BinomialTable:
    """Every {chi_a choose chi_b} for one field, plus cached evaluators.

    ``T[a, b]`` is the group-ring vector of {chi_a choose chi_b}. Instances
    are built once per field by ``binomial_table`` and then only read, apart
    from the memo dictionaries which hold deterministic values.
    """

    def __init__(self, field: FieldTable):
        self.field = field
        q, n = field.q, field.n
        self.q, self.n = q, n
        self.dtype = gr_dtype(n)
        log = field.log_table
        self.log = log
        self.lm1 = field.log_minus_one
        self.L = log  # dlog of every element, -1 at zero
        self.L1 = log[field.one_minus_table]  # dlog(1 - u)

        us = np.array([u for u in range(q) if log[u] >= 0 and self.L1[u] >= 0], dtype=np.int64)
        Lu, L1u = log[us], self.L1[us]
        rows = np.arange(n)
        J = np.zeros((n, n, n), dtype=self.dtype)
        for a in range(n):
            # exponents of chi_a(u) chi_b(1-u), one row per b
            E = (a * Lu[None, :] + rows[:, None] * L1u[None, :]) % n
            flat = (E + n * rows[:, None]).ravel()
            J[a] = np.bincount(flat, minlength=n * n).reshape(n, n)
        self.J = J
        # {a choose b} = chi_b(-1) J(a, -b)
        T = shift(J[:, (-rows) % n], (rows * self.lm1)[None, :])
        self.T = T
        self.J.setflags(write=False)
        self.T.setflags(write=False)
        self._f21 = {}
        self._f2 = {}
        self._chis = rows

    # -- scalars -------------------------------------------------------------

    def ch(self, m: int, x: int) -> GR:
        """chi_m(x) as a group-ring monomial (zero at x = 0)."""
        return GR.mono(self.n, char_exponent(self.field, m, x))

    def eps(self, x: int) -> int:
        return 0 if x == 0 else 1

    def dc(self, m: int) -> int:
        return 1 if m % self.n == 0 else 0

    def de(self, x: int) -> int:
        return 1 if x == 0 else 0

    def jac(self, a: int, b: int) -> GR:
        return GR(self.J[a % self.n, b % self.n])

    def binom(self, a: int, b: int) -> GR:
        return GR(self.T[a % self.n, b % self.n])

    # -- hypergeometric functions -----------------------------------------------

    def f21(self, a: int, b: int, c: int, x: int) -> GR:
        """eps(x) BC(-1) sum_y B(y) B-bar C(1-y) A-bar(1-xy)."""
        n = self.n
        key = (a % n, b % n, c % n, x)
        hit = self._f21.get(key)
        if hit is not None:
            return hit
        if x == 0:
            out = GR.zero(n)
        else:
            F = self.field
            Lw = self.log[F.one_minus_table[F.mul_table[x]]]
            mask = (self.L >= 0) & (self.L1 >= 0) & (Lw >= 0)
            E = (b * self.L + (c - b) * self.L1 - a * Lw)[mask] % n
            v = np.bincount(E, minlength=n).astype(self.dtype)
            out = GR(np.roll(v, ((b + c) * self.lm1) % n))
        out.v.setflags(write=False)
        self._f21[key] = out
        return out

    def _charsum(self, parts, x: int) -> np.ndarray:
        """sum_chi prod(parts[chi]) chi(x), un-normalized."""
        if x == 0:
            return np.zeros(self.n, dtype=self.dtype)
        P = parts[0]
        for Q in parts[1:]:
            P = conv(P, Q)
        return shift(P, self._chis * int(self.log[x])).sum(axis=0)

    def fpq(self, numer, denom, x: int) -> GR:
        """(1/(q-1)) sum_chi {A0 chi choose chi} prod_i {Ai chi choose Bi chi} chi(x)."""
        if len(numer) != len(denom) + 1:
            raise ArityMismatch(f"{len(numer)} upper vs {len(denom)} lower parameters")
        n, chis = self.n, self._chis
        parts = [self.T[(numer[0] + chis) % n, chis]]
        for a, b in zip(numer[1:], denom):
            parts.append(self.T[(a + chis) % n, (b + chis) % n])
        return GR(self._charsum(parts, x)).exact_div(n)

    def f21cs(self, a: int, b: int, c: int, x: int) -> GR:
        return self.fpq((a, b), (c,), x)

    def f32(self, a0, a1, a2, b1, b2, x: int) -> GR:
        return self.fpq((a0, a1, a2), (b1, b2), x)

    def binomial_theorem_rhs(self, a: int, x: int) -> GR:
        n, chis = self.n, self._chis
        s = GR(self._charsum([self.T[a % n, chis]], x)).exact_div(n)
        return s + self.de(x)

    def trinomial_rhs(self, a: int, x: int, y: int) -> GR:
        F, n, chis = self.field, self.n, self._chis
        if y == F.neg(1):
            return self.ch(a, x)
        row = self.T[a % n, chis]
        s1x = GR(self._charsum([row], x))
        s1y = GR(self._charsum([row], y))
        # sum_{chi, lambda} {A choose chi}{A chi-bar choose lambda} chi(x) lambda(y)
        s2 = GR.zero(n)
        if x and y:
            inner = self.T[(a - chis)[:, None] % n, chis[None, :]]  # [chi, lambda]
            inner = shift(inner, chis[None, :] * int(self.log[y])).sum(axis=1)
            s2 = GR(self._charsum([row, inner], x))
        total = s2 + (s1y * self.de(x) + s1x * self.de(y)) * n + self.de(x) * self.de(y) * n * n
        return total.exact_div(n * n)


@lru_cache(maxsize=32)
def binomial_table(field: FieldTable) -> BinomialTable:
    return BinomialTable(field)


def _table(*chars: Character) -> BinomialTable:
    f = chars[0].field
    for c in chars[1:]:
        if c.field != f:
            raise MixedFields(f"characters over F_{f.q} and F_{c.field.q}")
    return binomial_table(f)


def jacobi(A: Character, B: Character) -> CycNum:
    """J(A, B) = sum_u A(u) B(1 - u)."""
    return _table(A, B).jac(A.m, B.m).reduce()


def binom(A: Character, B: Character) -> CycNum:
    return _table(A, B).binom(A.m, B.m).reduce()


def f21_def(A: Character, B: Character, C: Character, x: int) -> CycNum:
    return _table(A, B, C).f21(A.m, B.m, C.m, x).reduce()


def f21_charsum(A: Character, B: Character, C: Character, x: int) -> CycNum:
    return _table(A, B, C).f21cs(A.m, B.m, C.m, x).reduce()


def fpq_charsum(numer, denom, x: int) -> CycNum:
    if len(numer) != len(denom) + 1:
        raise ArityMismatch(f"{len(numer)} upper vs {len(denom)} lower parameters")
    bt = _table(*numer, *denom)
    return bt.fpq([c.m for c in numer], [c.m for c in denom], x).reduce()


def binomial_theorem_rhs(A: Character, x: int) -> CycNum:
    return binomial_table(A.field).binomial_theorem_rhs(A.m, x).reduce()


def trinomial_rhs(A: Character, x: int, y: int) -> CycNum:
    return binomial_table(A.field).trinomial_rhs(A.m, x, y).reduce()


def greene_2f1(A: Character, B: Character, C: Character, x: int) -> list[Fraction]:
    """Greene's 1/q-normalized 2F1, as rational coefficients in zeta."""
    q = A.field.q
    return [Fraction(c, q) for c in f21_def(A, B, C, x).coeffs]

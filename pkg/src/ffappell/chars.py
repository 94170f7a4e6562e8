"""Multiplicative characters of F_q^*, lifted to F_q by chi(0) = 0.

chi_m sends g^j to zeta_n^(m j) for the canonical generator g. Throughout the
package a character is identified with its exponent m mod n, so the group
law is addition, the inverse is negation and the trivial character is 0.
"""

from __future__ import annotations

from math import gcd

from .cyclo import CycNum, zeta_pow
from .ff_core import FieldTable


class MixedFields(ValueError):
    pass


class Character:
    __slots__ = ("field", "m")

    def __init__(self, field: FieldTable, m: int):
        self.field = field
        self.m = m % field.n

    def __eq__(self, other):
        return isinstance(other, Character) and self.field == other.field and self.m == other.m

    def __hash__(self):
        return hash((self.field.q, self.m))

    def __repr__(self):
        return f"chi_{self.m}(q={self.field.q})"

    def _same(self, other: Character):
        if self.field != other.field:
            raise MixedFields(f"characters over F_{self.field.q} and F_{other.field.q}")

    def __mul__(self, other: Character) -> Character:
        self._same(other)
        return Character(self.field, self.m + other.m)

    def __invert__(self) -> Character:
        return Character(self.field, -self.m)

    def __call__(self, x: int) -> CycNum:
        return char_eval(self, x)


def all_characters(field: FieldTable) -> list[Character]:
    return [Character(field, m) for m in range(field.n)]


def trivial(field: FieldTable) -> Character:
    return Character(field, 0)


def char_exponent(field: FieldTable, m: int, x: int):
    """Exponent e with chi_m(x) = zeta^e, or None when x = 0."""
    if x == 0:
        return None
    return (m * int(field.log_table[x])) % field.n


def char_eval(c: Character, x: int) -> CycNum:
    e = char_exponent(c.field, c.m, x)
    if e is None:
        return CycNum.zero(c.field.n)
    return zeta_pow(c.field.n, e)


def inverse(c: Character) -> Character:
    return ~c


def product(c: Character, d: Character) -> Character:
    return c * d


def is_trivial(c: Character) -> bool:
    return c.m == 0


def order(c: Character) -> int:
    n = c.field.n
    return n // gcd(n, c.m)


def delta_char(c) -> int:
    """1 iff the character (or exponent) is trivial."""
    m = c.m if isinstance(c, Character) else c
    return 1 if m == 0 else 0


def delta_elem(x: int) -> int:
    return 1 if x == 0 else 0

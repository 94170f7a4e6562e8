"""Finite fields F_q, q = p^k, as dense lookup tables.

Elements are integer indices in [0, q-1]: the base-p digits of an index are
the polynomial coefficients of the element, constant term least significant.
Index 0 is zero and index 1 is one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_BOUND = 1024


class FieldError(Exception):
    pass


class NotPrime(FieldError):
    def __init__(self, value):
        super().__init__(f"{value} is not a prime (power)")
        self.value = value


class BoundExceeded(FieldError):
    def __init__(self, q, bound):
        super().__init__(f"field size {q} exceeds bound {bound}")
        self.q = q
        self.bound = bound


class InternalNoGenerator(FieldError):
    pass


class ZeroElement(FieldError, ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, k) with q = p^k, or raise NotPrime."""
    if q < 2:
        raise NotPrime(q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise NotPrime(q)
    return p, k


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p: tuples of coefficients, ascending degree ---------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m over F_p."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _poly_trim(a[:dm])


def _monic_polys(p, d):
    # lexicographic from the highest non-leading coefficient down
    for tail in itertools.product(range(p), repeat=d):
        yield tuple(reversed(tail)) + (1,)


def is_irreducible(m, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(m, f, p):
                return False
    return True


def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over F_p."""
    for m in _monic_polys(p, k):
        if is_irreducible(m, p):
            return m
    raise InternalNoGenerator(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    modulus: tuple[int, ...] | None = None

    @property
    def q(self) -> int:
        return self.p ** self.k

    def modulus_str(self) -> str:
        if self.modulus is None:
            return f"x (prime field F_{self.p})"
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


class FieldTable:
    """A realized F_q with add/mul tables and discrete logs to a fixed generator.

    Treat instances as immutable. Two tables compare equal iff they realize
    the same (p, k); the construction is canonical, so the tables agree too.
    """

    def __init__(self, spec: FieldSpec, add: np.ndarray, exp: np.ndarray):
        self.spec = spec
        self.p, self.k = spec.p, spec.k
        self.q = spec.q
        self.n = self.q - 1
        q, n = self.q, self.n
        self.add_table = add
        self.exp_table = exp
        self.generator = int(exp[1 % n]) if n > 1 else 1
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(n)
        self.log_table = log
        self.neg_table = np.argmin(add, axis=1).astype(np.int64)
        lg = log[1:]
        mul = np.zeros((q, q), dtype=np.int64)
        mul[1:, 1:] = exp[(lg[:, None] + lg[None, :]) % n]
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-lg) % n]
        self.inv_table = inv
        self.one_minus_table = add[1, self.neg_table]
        # dlog(-1): n/2 in odd characteristic, 0 in characteristic 2
        self.log_minus_one = int(log[self.neg_table[1]])
        for arr in (add, exp, log, mul, inv, self.neg_table, self.one_minus_table):
            arr.setflags(write=False)

    def __eq__(self, other):
        return isinstance(other, FieldTable) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"FieldTable(q={self.q}, modulus={self.spec.modulus}, generator={self.generator})"

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("0 has no inverse")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def one_minus(self, a: int) -> int:
        return int(self.one_minus_table[a])

    sub_one_minus = one_minus

    def dlog(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("dlog(0) is undefined")
        return int(self.log_table[a])

    def exp(self, j: int) -> int:
        return int(self.exp_table[j % self.n])

    def header(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "k": self.k,
            "modulus": list(self.spec.modulus) if self.spec.modulus else None,
            "generator": self.generator,
        }


def _digits(q, p, k):
    idx = np.arange(q)
    return np.stack([(idx // p**i) % p for i in range(k)], axis=1)


def _poly_mul_index(a, b, p, k, modulus):
    da = [(a // p**i) % p for i in range(k)]
    db = [(b // p**i) % p for i in range(k)]
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] += x * y
    r = _poly_mod(prod, modulus, p)
    return sum(c * p**i for i, c in enumerate(r))


def _order(g, mul, n):
    x, e = g, 1
    while x != 1:
        x = mul(x, g)
        e += 1
        if e > n:
            return 0
    return e


@lru_cache(maxsize=None)
def _build(p: int, k: int) -> FieldTable:
    q = p**k
    n = q - 1
    if k == 1:
        spec = FieldSpec(p, 1)
        mul = lambda a, b: (a * b) % p  # noqa: E731
    else:
        modulus = canonical_modulus(p, k)
        spec = FieldSpec(p, k, modulus)
        mul = lambda a, b: _poly_mul_index(a, b, p, k, modulus)  # noqa: E731

    gen = next((g for g in range(1, q) if _order(g, mul, n) == n), None)
    if gen is None:
        raise InternalNoGenerator(f"no element of order {n} in F_{q}")
    exp = np.empty(n, dtype=np.int64)
    x = 1
    for j in range(n):
        exp[j] = x
        x = mul(x, gen)

    D = _digits(q, p, k)
    add = np.zeros((q, q), dtype=np.int64)
    for i in range(k):
        add += ((D[:, None, i] + D[None, :, i]) % p) * p**i
    return FieldTable(spec, add, exp)


def build_field(p: int, k: int = 1, bound: int = DEFAULT_BOUND) -> FieldTable:
    """Build F_{p^k}; deterministic and cached per (p, k)."""
    if not is_prime(p):
        raise NotPrime(p)
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if p**k > bound:
        raise BoundExceeded(p**k, bound)
    return _build(p, k)


def field_of_order(q: int, bound: int = DEFAULT_BOUND) -> FieldTable:
    p, k = prime_power(q)
    return build_field(p, k, bound=bound)

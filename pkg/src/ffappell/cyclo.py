"""Exact arithmetic in Z[zeta_n].

Two representations are used:

``CycNum``
    the canonical form, a polynomial in zeta of degree < phi(n) reduced
    modulo the cyclotomic polynomial Phi_n. Equality is coefficient equality.

``GR``
    an element of the group ring Z[C_n], i.e. a length-n vector of counts on
    zeta^0 .. zeta^(n-1). Character sums are naturally histograms over
    exponents, so evaluators accumulate in this form and project to
    ``CycNum`` once at the end. The projection is the ring map x -> zeta.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class MixedRoots(ValueError):
    pass


class NonDivisible(ArithmeticError):
    pass


IntPoly = tuple  # dense integer coefficients, ascending degree


def _pdivmod_monic(a, m):
    a = list(a)
    dm = len(m) - 1
    quot = [0] * max(len(a) - dm, 1)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            quot[i - dm] = c
            for j in range(dm + 1):
                a[i - dm + j] -= c * m[j]
    return quot, a[:dm]


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """Phi_n via (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _pmul(den, cyclotomic_poly(d))
    quot, rem = _pdivmod_monic(num, den)
    assert not any(rem), "cyclotomic division left a remainder"
    return tuple(quot)


def phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def gr_dtype(n: int):
    """int64 whenever q = n + 1 is small enough that no evaluated expression
    can overflow; object (Python ints) otherwise.

    Every expression here is a sum of at most q^4 products of at most four
    group-ring elements of L1 norm <= q, so its L1 norm is below q^8.
    """
    return np.int64 if 8 * (n + 1) ** 8 < 2**62 else object


@lru_cache(maxsize=None)
def reduction_matrix(n: int) -> np.ndarray:
    """Row j holds the coefficients of x^j mod Phi_n."""
    m = cyclotomic_poly(n)
    d = len(m) - 1
    rows = []
    for j in range(n):
        _, r = _pdivmod_monic([0] * j + [1], m)
        rows.append(r + [0] * (d - len(r)))
    mat = np.array(rows, dtype=object)
    if max((abs(int(c)) for c in mat.flat), default=0) < 2**20:
        mat = mat.astype(np.int64)
    mat.setflags(write=False)
    return mat


@lru_cache(maxsize=None)
def _circ_index(n: int) -> np.ndarray:
    k = np.arange(n)
    return (k[:, None] - k[None, :]) % n


def conv(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Batched product in Z[C_n] (cyclic convolution on the last axis)."""
    n = a.shape[-1]
    if a.dtype != object and b.dtype != object:
        return np.einsum("...j,...kj->...k", a, b[..., _circ_index(n)])
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=object)
    for j in range(n):
        out += a[..., j : j + 1] * np.roll(b, j, axis=-1)
    return out


def shift(v: np.ndarray, s) -> np.ndarray:
    """Multiply by zeta^s; s broadcasts against v's leading axes."""
    n = v.shape[-1]
    s = np.asarray(s)
    if s.ndim == 0:
        return np.roll(v, int(s), axis=-1)
    idx = (np.arange(n) - s[..., None]) % n
    return np.take_along_axis(v, np.broadcast_to(idx, v.shape), axis=-1)


def reduce_batch(v: np.ndarray) -> np.ndarray:
    """Project group-ring vectors (last axis length n) onto reduced coefficients."""
    n = v.shape[-1]
    R = reduction_matrix(n)
    if v.dtype == object or R.dtype == object:
        return v.astype(object) @ R.astype(object)
    return v @ R


@dataclass(frozen=True)
class CycNum:
    n: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != phi(self.n):
            raise ValueError(f"need {phi(self.n)} coefficients for n={self.n}")

    @classmethod
    def zero(cls, n: int) -> CycNum:
        return cls(n, (0,) * phi(n))

    @classmethod
    def from_int(cls, n: int, c: int) -> CycNum:
        return cls(n, (int(c),) + (0,) * (phi(n) - 1))

    @classmethod
    def from_group_ring(cls, v) -> CycNum:
        v = np.asarray(v)
        return cls(len(v), tuple(int(c) for c in reduce_batch(v)))

    def to_group_ring(self) -> np.ndarray:
        v = np.zeros(self.n, dtype=gr_dtype(self.n))
        v[: len(self.coeffs)] = self.coeffs
        return v

    def _check(self, other):
        if isinstance(other, int):
            return CycNum.from_int(self.n, other)
        if other.n != self.n:
            raise MixedRoots(f"zeta_{self.n} vs zeta_{other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CycNum(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        other = self._check(other)
        n = self.n
        folded = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    folded[(i + j) % n] += a * b
        return CycNum.from_group_ring(np.array(folded, dtype=object))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def exact_div(self, d: int) -> CycNum:
        if any(c % d for c in self.coeffs):
            raise NonDivisible(f"{self} is not divisible by {d}")
        return CycNum(self.n, tuple(c // d for c in self.coeffs))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.n)
        return sum((c * z**j for j, c in enumerate(self.coeffs) if c), 0j)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        return render(self.coeffs)


def render(coeffs) -> str:
    """Polynomial string in z, highest degree first, e.g. 'z^3 - 2z + 1'."""
    out = ""
    for j in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[j])
        if not c:
            continue
        mag = abs(c)
        mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
        body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def zeta_pow(n: int, j: int) -> CycNum:
    v = np.zeros(n, dtype=object)
    v[j % n] = 1
    return CycNum.from_group_ring(v)


def add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def neg(a: CycNum) -> CycNum:
    return -a


def scalar_mul(c: int, a: CycNum) -> CycNum:
    return CycNum(a.n, tuple(c * x for x in a.coeffs))


def is_zero(a: CycNum) -> bool:
    return a.is_zero()


def to_complex(a: CycNum) -> complex:
    return a.to_complex()


class GR:
    """Element of Z[C_n] used as a fast accumulator; see the module docstring."""

    __slots__ = ("v",)

    def __init__(self, v: np.ndarray):
        self.v = v

    @property
    def n(self) -> int:
        return self.v.shape[-1]

    @classmethod
    def zero(cls, n: int) -> GR:
        return cls(np.zeros(n, dtype=gr_dtype(n)))

    @classmethod
    def mono(cls, n: int, e) -> GR:
        """zeta^e, or 0 when e is None (a character evaluated at 0)."""
        v = np.zeros(n, dtype=gr_dtype(n))
        if e is not None:
            v[e % n] = 1
        return cls(v)

    @classmethod
    def const(cls, n: int, c: int) -> GR:
        v = np.zeros(n, dtype=gr_dtype(n))
        v[0] = c
        return cls(v)

    @classmethod
    def of(cls, x: CycNum) -> GR:
        return cls(x.to_group_ring())

    def _coerce(self, other):
        if isinstance(other, GR):
            if other.n != self.n:
                raise MixedRoots(f"zeta_{self.n} vs zeta_{other.n}")
            return other.v
        if isinstance(other, CycNum):
            return self._coerce(GR.of(other))
        return GR.const(self.n, other).v

    def __add__(self, other):
        return GR(self.v + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return GR(self.v - self._coerce(other))

    def __rsub__(self, other):
        return GR(self._coerce(other) - self.v)

    def __neg__(self):
        return GR(-self.v)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GR(self.v * int(other))
        return GR(conv(self.v, self._coerce(other)))

    __rmul__ = __mul__

    def shift(self, e) -> GR:
        if e is None:
            return GR.zero(self.n)
        return GR(np.roll(self.v, e % self.n))

    def reduce(self) -> CycNum:
        return CycNum.from_group_ring(self.v)

    def exact_div(self, d: int) -> GR:
        return GR.of(self.reduce().exact_div(d))

    def is_zero(self) -> bool:
        return self.reduce().is_zero()

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi * np.arange(self.n) / self.n)
        return complex(np.dot(self.v.astype(float), z))

    def __repr__(self):
        return f"GR({self.reduce()})"

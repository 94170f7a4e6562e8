import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffappell.cyclo import (
    GR, CycNum, MixedRoots, NonDivisible, cyclotomic_poly, phi, reduction_matrix, zeta_pow,
)

from oracles import zeta


def test_known_cyclotomics():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)


@pytest.mark.parametrize("n", range(1, 40))
def test_degree_and_roots(n):
    c = cyclotomic_poly(n)
    assert len(c) - 1 == phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    z = zeta(n, 1)
    assert abs(sum(a * z ** i for i, a in enumerate(c))) < 1e-9


@pytest.mark.parametrize("n", range(1, 25))
def test_reduction_matrix_rows(n):
    R = reduction_matrix(n)
    for j in range(n):
        got = sum(int(c) * zeta(n, i) for i, c in enumerate(R[j]))
        assert abs(got - zeta(n, j)) < 1e-9


def test_to_complex_examples():
    assert zeta_pow(4, 1).to_complex() == pytest.approx(1j)
    assert CycNum.from_int(1, 3).to_complex() == pytest.approx(3)
    s = zeta_pow(8, 1) + zeta_pow(8, 7)
    assert abs(s.to_complex() - math.sqrt(2)) < 1e-12


def test_render():
    assert str(CycNum(5, (1, -2, 0, 1))) == "z^3 - 2z + 1"
    assert str(CycNum.zero(4)) == "0"
    assert str(zeta_pow(4, 2)) == "-1"


@pytest.mark.parametrize("n", range(1, 25))
def test_zeta_pow_multiplicative(n):
    for j in range(n):
        for k in range(n):
            assert zeta_pow(n, j) * zeta_pow(n, k) == zeta_pow(n, (j + k) % n)


@pytest.mark.parametrize("n", range(2, 25))
def test_full_period_vanishes(n):
    total = CycNum.zero(n)
    for j in range(n):
        total = total + zeta_pow(n, j)
    assert total.is_zero()


def _cyc(n):
    return st.lists(st.integers(-1000, 1000), min_size=phi(n), max_size=phi(n)).map(
        lambda cs: CycNum(n, tuple(cs)))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 24).flatmap(lambda n: st.tuples(_cyc(n), _cyc(n))))
def test_to_complex_is_ring_hom(pair):
    a, b = pair
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9 * max(1, abs(a.to_complex() * b.to_complex()))
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9
    assert (a - a).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 24).flatmap(lambda n: st.tuples(_cyc(n), st.integers(1, 50))))
def test_exact_div_roundtrip(pair):
    a, d = pair
    assert (a * d).exact_div(d) == a


def test_non_divisible():
    with pytest.raises(NonDivisible):
        CycNum(4, (3, 1)).exact_div(2)
    with pytest.raises(NonDivisible):
        GR(np.array([1, 0, 0, 0], dtype=np.int64)).exact_div(2)


def test_mixed_roots():
    with pytest.raises(MixedRoots):
        zeta_pow(4, 1) + zeta_pow(6, 1)


def test_canonical_equality():
    # 1 + z + z^2 = 0 in Z[zeta_3]; the group ring view reduces to the same canonical form
    v = np.ones(3, dtype=np.int64)
    assert CycNum.from_group_ring(v).is_zero()
    assert GR(v).reduce() == CycNum.zero(3)
    assert GR.mono(6, 3).reduce() == CycNum.from_int(6, -1)
    assert GR.mono(6, None).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 24).flatmap(
    lambda n: st.tuples(*(st.lists(st.integers(-50, 50), min_size=n, max_size=n) for _ in range(2)))))
def test_group_ring_product_matches_cycnum(vs):
    a, b = (np.array(v, dtype=np.int64) for v in vs)
    ga, gb = GR(a), GR(b)
    assert (ga * gb).reduce() == ga.reduce() * gb.reduce()
    assert abs((ga * gb).to_complex() - ga.to_complex() * gb.to_complex()) < 1e-6 * (1 + abs(ga.to_complex() * gb.to_complex()))


def test_big_coefficients_do_not_overflow():
    big = CycNum.from_int(12, 3 ** 45)
    assert (big * big).coeffs[0] == 3 ** 90
    assert cmath.isclose(big.to_complex(), 3 ** 45)

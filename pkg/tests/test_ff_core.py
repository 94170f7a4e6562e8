import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffappell.ff_core import (
    BoundExceeded, NotPrime, ZeroElement, _build, build_field, canonical_modulus,
    field_of_order, is_irreducible,
)

from oracles import PRIME_POWERS_25


def test_prime_field_5():
    F = build_field(5, 1)
    assert (F.q, F.generator, F.n) == (5, 2, 4)
    assert pow(2, 4, 5) == 1 and pow(2, 2, 5) != 1


def test_f9_modulus_and_generator():
    F = build_field(3, 2)
    assert F.spec.modulus == (1, 0, 1)  # x^2 + 1, constant term first
    x, x_plus_1 = 3, 4
    assert F.generator == x_plus_1
    assert F.mul(x, x) == 2
    # oracle: order of every smaller candidate, by repeated multiplication
    def order(g):
        k, a = 1, g
        while a != 1:
            a, k = F.mul(a, g), k + 1
        return k
    assert order(x_plus_1) == 8
    assert all(order(g) < 8 for g in range(1, x_plus_1))


def test_not_prime():
    with pytest.raises(NotPrime):
        build_field(6, 1)
    with pytest.raises(NotPrime):
        field_of_order(6)
    with pytest.raises(NotPrime):
        field_of_order(12)


def test_bound():
    with pytest.raises(BoundExceeded):
        build_field(2, 11)
    with pytest.raises(BoundExceeded):
        field_of_order(49, bound=32)


def test_small_ops():
    assert build_field(5).add(3, 4) == 2
    assert build_field(7).inv(3) == 5
    F = build_field(5)
    assert F.dlog(4) == 2
    assert F.one_minus(3) == 3


@pytest.mark.parametrize("q", PRIME_POWERS_25)
def test_zero_element_errors(q):
    F = field_of_order(q)
    assert F.dlog(1) == 0
    with pytest.raises(ZeroElement):
        F.dlog(0)
    with pytest.raises(ZeroElement):
        F.inv(0)


@pytest.mark.parametrize("q", PRIME_POWERS_25)
def test_generator_generates(q):
    F = field_of_order(q)
    assert sorted(F.exp(j) for j in range(F.n)) == list(range(1, q))


@pytest.mark.parametrize("q", PRIME_POWERS_25)
def test_dlog_homomorphism(q):
    F = field_of_order(q)
    for a, b in itertools.product(range(1, q), repeat=2):
        assert F.dlog(F.mul(a, b)) == (F.dlog(a) + F.dlog(b)) % F.n


@pytest.mark.parametrize("q", PRIME_POWERS_25)
def test_field_axioms(q):
    F = field_of_order(q)
    els = range(q)
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        assert F.one_minus(a) == F.sub(1, a)
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)


def test_deterministic():
    _build.cache_clear()
    a = build_field(2, 3)
    _build.cache_clear()
    b = build_field(2, 3)
    assert a is not b
    assert (a.add_table == b.add_table).all() and (a.mul_table == b.mul_table).all()
    assert a.generator == b.generator and a.spec == b.spec


def _brute_irreducible(m, p):
    # oracle: m has no factor among all monic polys of degree 1..k-1 (via product enumeration)
    k = len(m) - 1
    target = list(m)
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out
    for d in range(1, k):
        for a_low in itertools.product(range(p), repeat=d):
            for b_low in itertools.product(range(p), repeat=k - d):
                if mul(list(a_low) + [1], list(b_low) + [1]) == target:
                    return False
    return True


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_canonical_modulus_is_smallest_irreducible(p, k):
    m = canonical_modulus(p, k)
    assert m[-1] == 1 and len(m) == k + 1
    assert _brute_irreducible(m, p)
    # every monic poly earlier in high-to-low lexicographic order is reducible
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(reversed(low)) + (1,)
        if tuple(reversed(cand)) < tuple(reversed(m)):
            assert not _brute_irreducible(cand, p)
        assert is_irreducible(cand, p) == _brute_irreducible(cand, p)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(PRIME_POWERS_25), st.data())
def test_distributive(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))

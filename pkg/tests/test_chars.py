import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffappell.chars import (
    Character, MixedFields, all_characters, char_eval, delta_char, delta_elem, inverse,
    is_trivial, order, product, trivial,
)
from ffappell.cyclo import CycNum, zeta_pow
from ffappell.ff_core import field_of_order

from oracles import PRIME_POWERS_25, chi_c


def test_zero_maps_to_zero():
    for q in (2, 3, 4, 5, 9):
        F = field_of_order(q)
        for c in all_characters(F):
            assert char_eval(c, 0).is_zero()


def test_examples_q5():
    F = field_of_order(5)
    c1 = Character(F, 1)
    assert c1(2) == zeta_pow(4, 1)
    assert c1(4) == CycNum.from_int(4, -1)
    assert product(c1, Character(F, 3)) == trivial(F)
    assert inverse(trivial(F)) == trivial(F)
    assert order(Character(field_of_order(7), 2)) == 3
    assert delta_char(Character(F, 2)) == 0
    assert delta_char(trivial(F)) == 1
    assert delta_char(product(c1, inverse(c1))) == 1
    assert is_trivial(c1 * ~c1)


def test_delta_elem():
    F = field_of_order(7)
    assert delta_elem(0) == 1 and delta_elem(1) == 0 and delta_elem(F.neg(0)) == 1


def test_mixed_fields():
    with pytest.raises(MixedFields):
        Character(field_of_order(5), 1) * Character(field_of_order(7), 1)


@pytest.mark.parametrize("q", PRIME_POWERS_25)
def test_orthogonality(q):
    F = field_of_order(q)
    for c in all_characters(F):
        total = CycNum.zero(F.n)
        for x in F.nonzero():
            total = total + c(x)
        assert total == CycNum.from_int(F.n, F.n if is_trivial(c) else 0)


@pytest.mark.parametrize("q", PRIME_POWERS_25)
def test_inverse_and_order(q):
    F = field_of_order(q)
    for c in all_characters(F):
        assert inverse(c).m == (F.n - c.m) % F.n
        k = order(c)
        assert all((c.m * j) % F.n for j in range(1, k)) and (c.m * k) % F.n == 0


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(PRIME_POWERS_25), st.data())
def test_multiplicative_and_nonvanishing(q, data):
    F = field_of_order(q)
    m = data.draw(st.integers(0, F.n - 1))
    x = data.draw(st.integers(1, q - 1))
    y = data.draw(st.integers(1, q - 1))
    c = Character(F, m)
    assert c(F.mul(x, y)) == c(x) * c(y)
    assert not c(x).is_zero()
    assert abs(c(x).to_complex() - chi_c(F, m, x)) < 1e-9

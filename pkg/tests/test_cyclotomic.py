from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from earoot.cyclotomic import Cyclotomic, cyclotomic_polynomial


def test_phi():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_roots_of_unity():
    z = Cyclotomic.zeta(3)
    assert z ** 3 == 1 and z != 1
    assert 1 + z + z ** 2 == 0
    assert Cyclotomic.zeta(4) ** 2 == -1


def test_inverse_and_conjugate():
    z = Cyclotomic.zeta(5)
    assert z * z.inverse() == 1
    assert z.conjugate() == z ** -1
    x = 2 + 3 * z - z ** 3
    assert x * x.inverse() == 1


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(5).inverse()


def test_order_mismatch():
    with pytest.raises(ValueError):
        Cyclotomic.zeta(3) + Cyclotomic.zeta(4)


def test_rational_view():
    assert Cyclotomic.rational(7, Fraction(2, 3)).to_fraction() == Fraction(2, 3)
    assert not Cyclotomic.zeta(7).is_rational()
    with pytest.raises(ValueError):
        Cyclotomic.zeta(7).to_fraction()


elems = st.tuples(st.sampled_from([3, 4, 5, 6, 8]), st.data())


def draw(order, data):
    cs = data.draw(st.lists(st.fractions(max_denominator=5).filter(lambda f: abs(f) < 10), max_size=order))
    return Cyclotomic(order, cs)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 4, 5, 6, 8]), st.data())
def test_field_axioms(order, data):
    a, b, c = draw(order, data), draw(order, data), draw(order, data)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if a != 0:
        assert a * a.inverse() == 1
        assert (b / a) * a == b

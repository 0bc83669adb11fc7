from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexvanish.errors import InvariantError, ValidationError
from lexvanish.unipoly import UniPoly, eea, gcd

coeff_lists = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), max_size=5)


def x_minus(c):
    return UniPoly.linear(c, var=1)


def test_eea_cofactors_of_two_levels():
    g, r1, r2 = eea(x_minus(2), x_minus(1))
    assert g == 1
    assert r1 == -1
    assert r2 == 1


def test_eea_with_zero_second_argument():
    f = UniPoly((4, 0, 2), var=1)
    g, r1, r2 = eea(f, UniPoly((), var=1))
    assert g == f.monic()
    assert r1 == Fraction(1, 2)
    assert r2.is_zero()


def test_eea_bezout_by_expansion():
    a = x_minus(1) ** 2
    b = x_minus(2)
    g, r1, r2 = eea(a, b)
    assert g == 1
    assert r1 * a + r2 * b == 1
    # (X-1)^2 = 1 at X = 2 so r1 is the constant 1 and r2 = -X
    assert r1 == 1 and r2 == UniPoly((0, -1), var=1)


def test_eea_both_zero():
    with pytest.raises(ValidationError):
        eea(UniPoly(), UniPoly())


def test_gcd_of_shared_root_is_monic():
    a = UniPoly((3,)) * UniPoly.linear(1) * UniPoly.linear(5)
    b = UniPoly.linear(1) * UniPoly.linear(-2)
    assert gcd(a, b) == UniPoly.linear(1)


@given(coeff_lists, coeff_lists)
def test_eea_postcondition(a, b):
    a, b = UniPoly(a), UniPoly(b)
    if a.is_zero() and b.is_zero():
        return
    g, r1, r2 = eea(a, b)
    assert r1 * a + r2 * b == g
    assert g.lead == 1
    assert g.divides(a) and g.divides(b)


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divmod_identity(a, b):
    a, b = UniPoly(a), UniPoly(b)
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_exact_div_raises_on_remainder():
    with pytest.raises(InvariantError):
        UniPoly.linear(1).exact_div(UniPoly.linear(2))
    assert (UniPoly.linear(1) ** 3).exact_div(UniPoly.linear(1)) == UniPoly.linear(1) ** 2


def test_round_trip_through_polynomial():
    u = UniPoly((1, -2, 1), var=2)
    f = u.to_polynomial(3)
    assert str(f) == "x3^2 - 2*x3 + 1"
    assert UniPoly.from_polynomial(f) == u
    assert u(Fraction(1)) == 0

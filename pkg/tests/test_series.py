from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knodelwalk.errors import (
    InexactCancellation,
    NonSquareConstant,
    NonzeroInnerConstant,
    NotRevertible,
    ZeroConstantTerm,
)
from knodelwalk.series import (
    PowerSeries,
    UPoly,
    ps_add,
    ps_compose,
    ps_div,
    ps_mul,
    ps_revert,
    ps_shift_div,
    ps_sqrt,
)

from conftest import binomial_series, series

F = Fraction
PS = PowerSeries


def test_add_cancellation_takes_min_order():
    s = ps_add(PS([1, 1], 5), PS([1, -1], 3))
    assert s == PS([2], 3)
    assert s.order == 3


def test_add_identity_and_exact_rational():
    a = PS([1, F(1, 2)], 4)
    assert ps_add(a, PS.zero(4)) == a
    assert ps_add(a, PS([0, F(1, 2)], 4)) == PS([1, 1], 4)


def test_mul_examples():
    assert ps_mul(PS([1, 1], 6), PS([1, -1], 6)) == PS([1, 0, -1], 6)
    a = PS([3, F(-2, 7), 5], 6)
    assert ps_mul(a, PS.constant(1, 6)) == a
    assert ps_mul(PS([1, 1, 1], 8), PS([1, -1], 8)) == PS([1, 0, 0, -1], 8)


def test_mul_truncates_at_min_order():
    assert ps_mul(PS([1, 1], 10), PS([1, 1], 2)).order == 2


def test_div_geometric():
    assert ps_div(PS.constant(1, 10), PS([1, -1], 10)) == PS([1] * 11)
    a = PS([2, 3, F(1, 5)], 7)
    assert ps_div(a, a) == PS.constant(1, 7)


def test_div_remultiplication():
    a = PS([1, 0, -1], 12)
    b = PS([1, 0, 0, -1], 12)
    q = ps_div(a, b)
    assert ps_mul(q, b) == a
    # (1 - v^2)/(1 - v^3) = (1 + v)/(1 + v + v^2): period-3 pattern 1, 0, -1
    assert list(q.coeffs[:6]) == [1, 0, -1, 1, 0, -1]


def test_div_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        ps_div(PS.constant(1, 3), PS([0, 1], 3))


def test_sqrt_binomial_oracle():
    s = ps_sqrt(PS([1, -1], 20))
    assert s == binomial_series(F(1, 2), 20)
    assert list(s.coeffs[:4]) == [1, F(-1, 2), F(-1, 8), F(-1, 16)]
    assert ps_sqrt(PS.constant(1, 5)) == PS.constant(1, 5)


def test_sqrt_of_W_squared():
    a = F(1, 3)
    c = (1 - 2 * a) ** 2
    W2 = PS([1, 0, -1], 16) * PS([1, 0, -c], 16)
    W = ps_sqrt(W2)
    assert W * W == W2
    assert W[0] == 1 and W[2] == -(a * a + (1 - a) ** 2) == F(-5, 9)
    assert all(x == 0 for x in W.coeffs[1::2])


def test_sqrt_nonsquare_constant():
    with pytest.raises(NonSquareConstant):
        ps_sqrt(PS([2, 1], 3))
    assert ps_sqrt(PS([F(4, 9), 1], 6))[0] == F(2, 3)


def test_shift_div():
    assert ps_shift_div(PS([0, 0, 1, 1], 5), 2) == PS([1, 1], 3)
    assert ps_shift_div(PS.zero(4), 1) == PS.zero(3)
    with pytest.raises(InexactCancellation):
        ps_shift_div(PS([0, 1, 1], 5), 2)


def test_shift_div_W_cancellation():
    # (1 - s z^2 - W) / z^4 at alpha = 1/2 starts with 2 a^2 b^2 = 1/8
    W = ps_sqrt(PS([1, 0, -1], 10))
    top = PS([1, 0, F(-1, 2)], 10) - W
    assert ps_shift_div(top, 4)[0] == F(1, 8)


def test_compose():
    geo = PS([1] * 11)
    assert ps_compose(geo, PS.variable(10)) == geo
    assert ps_compose(PS([3, 4, 5], 6), PS.zero(6)) == PS.constant(3, 6)
    with pytest.raises(NonzeroInnerConstant):
        ps_compose(geo, PS([1, 1], 10))


def test_compose_against_direct_expansion():
    # 1/(1-t) at t = z + z^2 equals 1/(1 - z - z^2)
    got = ps_compose(PS([1] * 16), PS([0, 1, 1], 15))
    assert got == ps_div(PS.constant(1, 15), PS([1, -1, -1], 15))


def test_revert():
    assert ps_revert(PS.variable(8)) == PS.variable(8)
    # z(v) = 4v/(1+v)^2; inverse starts z/4 + z^2/8
    zv = ps_div(PS([0, 4], 12), PS([1, 2, 1], 12))
    v = ps_revert(zv)
    assert v[1] == F(1, 4) and v[2] == F(1, 8)
    assert ps_compose(zv, v) == PS.variable(12)
    with pytest.raises(NotRevertible):
        ps_revert(PS([1, 1], 4))
    with pytest.raises(NotRevertible):
        ps_revert(PS([0, 0, 1], 4))


def test_pow_and_negative_pow():
    a = PS([1, 2, 3], 8)
    assert a**3 == a * a * a
    assert a**-2 * a**2 == PS.constant(1, 8)


def test_upoly_mul_and_evaluate():
    one = PS.constant(1, 6)
    z = PS.variable(6)
    p = UPoly([one, z])  # 1 + z u
    q = p * p
    assert q.udeg == 1 and q[1] == z * 2  # u^2 term dropped at udeg 1
    p2 = UPoly([one, z, PS.zero(6)])
    assert (p2 * p2)[2] == z * z
    assert p2.evaluate(z) == one + z * z
    even = UPoly([one, PS.zero(6), z])
    assert even.evaluate_u2(z) == one + z * z
    with pytest.raises(ValueError):
        p2.evaluate_u2(z)


# -- algebra laws on random series ------------------------------------------

LAWS = settings(max_examples=25, deadline=None)


@LAWS
@given(series(), series())
def test_add_sub_roundtrip(a, b):
    assert (a + b) - b == a


@LAWS
@given(series(), series(unit=True))
def test_mul_div_roundtrip(a, b):
    assert (a * b) / b == a


@LAWS
@given(series(const=1))
def test_sqrt_squares_back(a):
    assert ps_sqrt(a) ** 2 == a


@LAWS
@given(series(order=20, zero_const=True))
def test_revert_roundtrip(a):
    if a[1] == 0:
        a = a + PS.monomial(1, a.order)
    b = ps_revert(a)
    z = PS.variable(a.order)
    assert ps_compose(b, a) == z
    assert ps_compose(a, b) == z


@LAWS
@given(series(order=16), series(order=16), series(order=16))
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@LAWS
@given(series(order=20), st.integers(min_value=0, max_value=20))
def test_shift_div_inverts_shift_mul(a, k):
    assert ps_shift_div(a.shift_mul(k), k) == a

"""Truncated exact power-series engine: ring laws, analytic ops, truncation."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polybern.series import (
    DomainError,
    Series1,
    Series2,
    egf_coefficient,
    polylog_substitute,
    product_xy,
)

ORDER = 8

coeff = st.fractions(min_value=-4, max_value=4, max_denominator=6)
series1 = st.lists(coeff, min_size=ORDER + 1, max_size=ORDER + 1).map(
    lambda cs: Series1(cs, ORDER)
)
unit1 = series1.filter(lambda s: s.constant_term != 0)
nilpotent1 = series1.map(lambda s: s - Series1.constant(s.constant_term, ORDER))


def random_series2(draw_coeffs):
    rows = []
    it = iter(draw_coeffs)
    for i in range(ORDER + 1):
        rows.append([next(it) for _ in range(ORDER - i + 1)])
    return Series2(rows, ORDER)


n2 = (ORDER + 1) * (ORDER + 2) // 2
series2 = st.lists(coeff, min_size=n2, max_size=n2).map(random_series2)


# ---------------------------------------------------------------------------
# construction and access


def test_constructors_and_getitem():
    s = Series1([1, 2, 3], 5)
    assert s[0] == 1 and s[2] == 3 and s[5] == 0
    with pytest.raises(IndexError):
        s[6]
    assert Series1.monomial(7, 2, 4)[2] == 7
    assert Series1.variable(3) == Series1([0, 1], 3)
    t = Series2.variable(1, 3)
    assert t[0, 1] == 1 and t[1, 0] == 0
    with pytest.raises(IndexError):
        t[2, 2]


def test_equality_requires_same_order():
    assert Series1.one(3) != Series1.one(4)
    assert Series1([1, 2], 3) == Series1([1, 2, 0, 0], 3)
    assert Series2.one(3) != Series2.one(4)
    # hash consistency across int/Fraction coefficient spellings
    assert hash(Series1([1, Fraction(1, 2)], 2)) == hash(Series1([Fraction(1), Fraction(2, 4)], 2))


def test_truncate():
    s = Series1([1, 2, 3, 4], 3)
    assert s.truncate(1) == Series1([1, 2], 1)
    with pytest.raises(ValueError):
        s.truncate(4)
    b = Series2.embed(s, 0)
    assert b.truncate(2)[2, 0] == 3
    with pytest.raises(ValueError):
        b.truncate(9)


# ---------------------------------------------------------------------------
# ring laws (hypothesis)


@given(series1, series1, series1)
@settings(max_examples=60, deadline=None)
def test_ring_laws_1d(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Series1.zero(ORDER) == a
    assert a * Series1.one(ORDER) == a
    assert a - a == Series1.zero(ORDER)


@given(series2, series2, series2)
@settings(max_examples=25, deadline=None)
def test_ring_laws_2d(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * Series2.one(ORDER) == a


@given(series1, series1)
@settings(max_examples=60, deadline=None)
def test_mul_matches_schoolbook_convolution(a, b):
    prod = a * b
    for n in range(ORDER + 1):
        assert prod[n] == sum(a[k] * b[n - k] for k in range(n + 1))


def test_mul_truncates_to_min_order():
    a = Series1([1, 1], 5)
    b = Series1([1, 1], 3)
    assert (a * b).order == 3
    assert (a + b).order == 3


# ---------------------------------------------------------------------------
# inverse / power / exp


@given(unit1)
@settings(max_examples=50, deadline=None)
def test_inverse_is_two_sided(a):
    inv = a.inverse()
    assert a * inv == Series1.one(ORDER)
    assert inv * a == Series1.one(ORDER)


def test_geometric_series():
    inv = Series1([1, -1], 6).inverse()
    assert inv == Series1([1] * 7, 6)
    with pytest.raises(DomainError):
        Series1.variable(4).inverse()
    with pytest.raises(DomainError):
        Series2.variable(0, 4).inverse()


@given(unit1, st.integers(-4, 4))
@settings(max_examples=40, deadline=None)
def test_power_matches_repeated_multiplication(a, e):
    direct = a.power(e)
    acc = Series1.one(ORDER)
    base = a if e >= 0 else a.inverse()
    for _ in range(abs(e)):
        acc = acc * base
    assert direct == acc
    assert a ** 2 == a * a


@given(nilpotent1, nilpotent1)
@settings(max_examples=40, deadline=None)
def test_exp_is_a_homomorphism(a, b):
    assert (a + b).exp() == a.exp() * b.exp()


def test_exp_explicit():
    e = Series1.variable(6).exp()
    for n in range(7):
        assert e[n] == Fraction(1, factorial(n))
    with pytest.raises(DomainError):
        Series1.one(3).exp()
    with pytest.raises(DomainError):
        Series2.one(3).exp()
    # 2D: exp(x + y) = exp(x) exp(y)
    x, y = Series2.variable(0, 6), Series2.variable(1, 6)
    ex = Series1.variable(6).exp()
    assert (x + y).exp() == product_xy(ex, ex)


@given(series1, series1)
@settings(max_examples=40, deadline=None)
def test_derivative_is_leibniz(a, b):
    lhs = (a * b).derivative()
    rhs = a.derivative() * b.truncate(ORDER - 1) + a.truncate(ORDER - 1) * b.derivative()
    assert lhs == rhs


def test_derivative_2d_mixed_partials_commute():
    ex = Series1.variable(6).exp()
    s = product_xy(ex, ex + 1) + Series2.variable(0, 6) * 3
    assert s.derivative(0).derivative(1) == s.derivative(1).derivative(0)
    assert s.derivative(0).order == 5


# ---------------------------------------------------------------------------
# composition


def test_compose_golden():
    # x^2 ∘ (x/(1-x)) = x^2 + 2x^3 + 3x^4 + ...
    square = Series1.monomial(1, 2, 6)
    inner = Series1.variable(6) * Series1([1, -1], 6).inverse()
    out = square.compose(inner)
    assert out == Series1([0, 0, 1, 2, 3, 4, 5], 6)


@given(nilpotent1)
@settings(max_examples=40, deadline=None)
def test_compose_identity(a):
    x = Series1.variable(ORDER)
    assert a.compose(x) == a
    assert x.compose(a) == a


@given(series1, nilpotent1, nilpotent1)
@settings(max_examples=25, deadline=None)
def test_compose_is_associative(f, g, h):
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


def test_compose_requires_nilpotent_inner():
    with pytest.raises(DomainError):
        Series1.variable(4).compose(Series1.one(4))


def test_mobius_substitution():
    f = Series1([0, 1, 1, 1, 1, 1, 1], 6)
    once = f.mobius_substitution(1).mobius_substitution(1)
    assert once == f.mobius_substitution(2)
    # x/(1-cx) with c=0 is the identity substitution
    assert f.mobius_substitution(0) == f
    # direct check: x ∘ mobius(1) = x + x^2 + x^3 + ...
    x = Series1.variable(5)
    assert x.mobius_substitution(1) == Series1([0, 1, 1, 1, 1, 1], 5)


# ---------------------------------------------------------------------------
# polylog substitution and EGF extraction


def test_polylog_log_oracle():
    # Li_1(z) = -log(1-z) = sum z^m / m
    z = Series1.variable(10)
    li1 = polylog_substitute(1, z)
    assert li1 == Series1([0] + [Fraction(1, m) for m in range(1, 11)], 10)
    # and its derivative is 1/(1-z)
    assert li1.derivative() == Series1([1, -1], 9).inverse()


def test_polylog_k0_is_geometric_ratio():
    z = Series1.variable(9)
    li0 = polylog_substitute(0, z)  # z/(1-z)
    assert li0 == z * Series1([1, -1], 9).inverse()
    # Li_0(1 - e^{-t}) = e^t - 1
    t = Series1.variable(9)
    arg = 1 - (-t).exp()
    assert polylog_substitute(0, arg) == t.exp() - 1


def test_polylog_negative_k_integer_coefficients():
    z = Series1.variable(8)
    li = polylog_substitute(-2, z)  # sum m^2 z^m
    assert li == Series1([0] + [m * m for m in range(1, 9)], 8)
    with pytest.raises(DomainError):
        polylog_substitute(2, Series1.one(4))


def test_egf_coefficient():
    e = Series1.variable(7).exp()
    assert all(egf_coefficient(e, n) == 1 for n in range(8))
    ex = Series1.variable(5).exp()
    b = product_xy(ex, ex * 2)
    assert egf_coefficient(b, (2, 3)) == 2  # 2 * (1/2!)(1/3!) * 2! * 3!


def test_product_xy_matches_embeddings():
    a = Series1([1, 2, 3, 4], 3)
    b = Series1([5, 6, 7, 8], 3)
    assert product_xy(a, b) == Series2.embed(a, 0) * Series2.embed(b, 1)
    assert product_xy(a, b, order=2) == product_xy(a, b).truncate(2)


def test_embed_round_trip():
    s = Series1([3, 1, 4, 1, 5], 4)
    e0 = Series2.embed(s, 0)
    for i in range(5):
        assert e0[i, 0] == s[i]
        if i:
            assert e0[0, i] == 0

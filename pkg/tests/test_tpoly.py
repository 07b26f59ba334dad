from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaq.partitions import enumerate_odd, enumerate_partitions, index_subpartitions
from gammaq.tpoly import (
    ONE,
    T,
    TLaurent,
    TPoly,
    ZERO,
    d_count,
    d_poly,
    exact_div,
    gauss_binomial,
    inv_z_t,
    regular_part,
    signed_t,
    t_integer,
)


def test_arithmetic_basics():
    assert TPoly([1, 1]) * TPoly([1, -1]) == TPoly([1, 0, -1])
    assert TPoly([1, 2])(0) == 1
    assert TPoly([1, 1]) + TPoly([-1, -1]) == ZERO
    assert (2 * T + 1) - (2 * T + 1) == ZERO
    assert T**3 == TPoly([0, 0, 0, 1])
    assert TPoly([Fraction(1, 2)]) * 2 == ONE
    assert TPoly([1, 2, 3])(Fraction(1, 2)) == Fraction(1) + 1 + Fraction(3, 4)


def test_canonical_form():
    assert TPoly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert TPoly([0, 0]).is_zero
    assert ZERO.degree == -1
    assert TPoly([0, 1]).degree == 1


def test_str():
    assert str(TPoly([5, 8, 2])) == "2t^2+8t+5"
    assert str(ZERO) == "0"
    assert str(TPoly([-1, 0, 2])) == "2t^2-1"
    assert str(T) == "t"
    assert str(TPoly([Fraction(3, 2), 1])) == "t+3/2"


def test_json_round_trip():
    p = TPoly([Fraction(1, 3), -2, 0, 5])
    assert TPoly.from_json(p.to_json()) == p
    assert (2 * T + 1).to_json() == ["1", "2"]
    assert ZERO.to_json() == []


def test_t_integer():
    assert t_integer(1) == ONE
    assert t_integer(2) == TPoly([1, 1])
    assert t_integer(4) == TPoly([1, 1, 1, 1])
    assert t_integer(0) == ONE
    with pytest.raises(ValueError):
        t_integer(-1)


def test_signed_t():
    assert signed_t(3) == TPoly([1, -1, 1])
    assert signed_t(0) == ONE
    assert signed_t(-2) == ZERO


def test_signed_t_sum_identity():
    # (k)_t + 2 sum_{i<k} (i)_t = [k]_t
    for k in range(1, 31):
        total = signed_t(k)
        for i in range(1, k):
            total = total + 2 * signed_t(i)
        assert total == t_integer(k), k


def test_gauss_binomial():
    assert gauss_binomial(2, 1) == TPoly([1, 1])
    assert gauss_binomial(4, 2) == TPoly([1, 1, 2, 1, 1])
    assert gauss_binomial(6, 0) == ONE
    with pytest.raises(ValueError):
        gauss_binomial(2, 3)
    # oracle: multiply the factorials back together
    for n in range(8):
        for k in range(n + 1):
            lhs = gauss_binomial(n, k)
            for i in range(1, k + 1):
                lhs = lhs * t_integer(i)
            for i in range(1, n - k + 1):
                lhs = lhs * t_integer(i)
            rhs = ONE
            for i in range(1, n + 1):
                rhs = rhs * t_integer(i)
            assert lhs == rhs, (n, k)


def test_d_poly():
    assert d_poly((5, 1, 1)) == TPoly([1, 1]) ** 2 * TPoly([1, 0, 0, 0, 0, 1])
    assert d_poly(()) == ONE
    assert d_poly((3, 3)) == TPoly([1, 0, 0, 1]) ** 2


def test_d_count():
    assert d_count((1, 1), 1) == 2
    assert d_count((5, 1, 1), 3) == 0
    assert d_count((4, 2), 0) == 1


def test_d_poly_counts_index_subpartitions():
    for n in range(11):
        for p in enumerate_partitions(n):
            poly = d_poly(p)
            assert poly.degree == n
            for i in range(n + 1):
                assert poly.coefficient(i) == len(index_subpartitions(p, i)), (p, i)


def test_d_poly_palindromic():
    for n in range(11):
        for p in enumerate_partitions(n):
            coeffs = d_poly(p).coeffs
            assert coeffs == coeffs[::-1], p


def test_inv_z_t():
    assert inv_z_t((1,)) == TPoly([-2, 2])
    assert inv_z_t(()) == ONE
    with pytest.raises(ValueError):
        inv_z_t((2,))


def test_inv_z_t_sum_identity():
    # sum over odd partitions of n equals 2(t-1)(n)_t; empty sum is 1
    assert sum((inv_z_t(r) for r in enumerate_odd(0)), ZERO) == ONE
    for n in range(1, 21):
        total = sum((inv_z_t(rho) for rho in enumerate_odd(n)), ZERO)
        assert total == TPoly([-2, 2]) * signed_t(n), n


def test_regular_part():
    assert regular_part(TLaurent(-1, [1, 1, 1])) == TPoly([1, 1])
    assert regular_part(TLaurent(-3, [1, 2])) == ZERO
    assert regular_part(TLaurent.from_tpoly(d_poly((5, 1, 1)), -4)) == TPoly([0, 1, 2, 1])
    assert regular_part(TLaurent(2, [1])) == TPoly([0, 0, 1])


def test_laurent_arithmetic():
    a = TLaurent(-1, [1, 1])  # 1/t + 1
    assert a + TLaurent(0, [1]) == TLaurent(-1, [1, 2])
    assert a * TLaurent(1, [1]) == TLaurent(0, [1, 1])
    assert (a - a).is_zero
    assert a(Fraction(1, 2)) == 3
    assert TLaurent(0, [0, 1]) == T
    with pytest.raises(ZeroDivisionError):
        a(0)


def test_exact_div():
    assert exact_div(TPoly([-1, 0, 1]), TPoly([1, 1])) == TPoly([-1, 1])
    assert exact_div(TPoly([0, 0, 2, 2]), TPoly([1, 1])) == TPoly([0, 0, 2])
    assert exact_div(ZERO, TPoly([1, 1])) == ZERO
    with pytest.raises(ValueError):
        exact_div(TPoly([2, 1]), TPoly([1, 1]))
    with pytest.raises(ValueError):
        exact_div(ONE, ZERO)


small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)
tpolys = st.lists(small_fractions, max_size=6).map(TPoly)


@settings(max_examples=100, deadline=None)
@given(tpolys, tpolys, tpolys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a
    assert a + ZERO == a
    assert a - a == ZERO


@settings(max_examples=100, deadline=None)
@given(tpolys, tpolys, small_fractions)
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@settings(max_examples=60, deadline=None)
@given(tpolys, tpolys)
def test_exact_div_inverts_mul(a, b):
    if b.is_zero:
        return
    assert exact_div(a * b, b) == a

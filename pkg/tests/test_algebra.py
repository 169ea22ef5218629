from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hatzeta.algebra import (
    HeckeElement,
    Mat2,
    bernoulli_plus,
    binomial,
    charpoly,
    divisor_sigma,
    divisors,
    format_rational,
    nullspace,
    nullspace_free,
    parse_rational,
    poly_divide_linear,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) < 10**9)


def test_parse_and_format_roundtrip():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert format_rational(Fraction(6, -4)) == "-3/2"
    assert parse_rational("-7") == Fraction(-7)
    assert format_rational(Fraction(36, 691)) == "36/691"


@pytest.mark.parametrize("bad", ["", "0.5", "1e3", "x/2", "1/0"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(bad)


@given(rationals)
def test_format_parse_identity(x):
    assert parse_rational(format_rational(x)) == x


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


def test_bernoulli_values():
    assert bernoulli_plus(0) == 1
    assert bernoulli_plus(1) == Fraction(1, 2)
    assert bernoulli_plus(2) == Fraction(1, 6)
    assert bernoulli_plus(3) == 0
    assert bernoulli_plus(12) == Fraction(-691, 2730)
    assert bernoulli_plus(20) == Fraction(-174611, 330)


def test_binomial():
    assert binomial(10, 2) == 45
    assert binomial(5, 7) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_sigma_values():
    assert [divisor_sigma(1, n) for n in range(1, 7)] == [1, 3, 4, 7, 6, 12]
    assert divisor_sigma(11, 2) == 2049
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ValueError):
        divisor_sigma(1, 0)


@given(st.integers(1, 300), st.integers(1, 300), st.integers(0, 5))
def test_sigma_multiplicative(m, n, p):
    from math import gcd

    if gcd(m, n) == 1:
        assert divisor_sigma(p, m * n) == divisor_sigma(p, m) * divisor_sigma(p, n)


def test_mat2_product_and_det():
    A, B = Mat2(1, 2, 3, 4), Mat2(0, -1, 1, 0)
    assert A @ B == Mat2(2, -1, 4, -3)
    assert (A @ B).det == A.det * B.det


def test_hecke_element_checks_determinant():
    with pytest.raises(ValueError):
        HeckeElement.from_matrices(2, [Mat2(1, 0, 0, 1)])
    T = HeckeElement.from_matrices(2, [Mat2(2, 0, 0, 1), Mat2(1, 0, 0, 2)])
    assert len(T) == 2 and len(T + T) == 4


def test_nullspace_small():
    # x + y + z = 0, y - z = 0
    basis, free = nullspace_free([[1, 1, 1], [0, 1, -1]], 3)
    assert free == [2]
    assert basis == [[Fraction(-2), Fraction(1), Fraction(1)]]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=3))
def test_nullspace_vectors_annihilate(rows):
    basis = nullspace(rows, 4)
    for v in basis:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0
    rank = 4 - len(basis)
    assert rank <= len(rows)


def test_charpoly_and_deflation():
    M = [[Fraction(2), Fraction(1)], [Fraction(0), Fraction(3)]]
    cp = charpoly(M)
    assert cp == [1, -5, 6]
    q, rem = poly_divide_linear(cp, Fraction(2))
    assert rem == 0 and q == [1, -3]

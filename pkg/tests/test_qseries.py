from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hatzeta.qseries import (
    QSeries,
    eisenstein_series,
    eta_delta,
    eulerian_poly,
    linear_combination,
    q_derivative,
    series_combine,
    zeta_hat_q,
    zeta_hat_q_product,
    zeta_q,
    zeta_q_from_eulerian,
    zeta_q_parity,
)

small = st.lists(st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100), min_size=1, max_size=12)


def brute_zeta_hat(r, s, N):
    """Coefficient of q^n in zetahat_q(r,s) from its defining quadruple sum."""
    from math import factorial

    out = [Fraction(0)] * (N + 1)
    for m in range(1, N + 1):
        for n in range(m + 1, N + 1):
            for u in range(1, N + 1):
                if (m + n) * u > N:
                    break
                for v in range(1, N + 1):
                    e = (m + n) * u + n * v
                    if e > N:
                        break
                    out[e] += Fraction(u ** (r - 1) * v ** (s - 1), factorial(r - 1) * factorial(s - 1))
    return QSeries(out)


def test_series_basics():
    a = QSeries([1, 2, 3])
    b = QSeries([0, 1])
    assert (a + b).order == 1
    assert (a * b).coeffs == (0, 1)
    assert (a * Fraction(1, 2)).coeffs == (Fraction(1, 2), 1, Fraction(3, 2))
    with pytest.raises(IndexError):
        a[5]
    with pytest.raises(ValueError):
        a.truncate(9)
    assert series_combine("sub", a, a).is_zero()
    assert a.first_mismatch(QSeries([1, 2, 4])) == 2


@given(small, small, small)
def test_ring_laws(x, y, z):
    a, b, c = QSeries(x), QSeries(y), QSeries(z)
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


def test_eulerian_examples():
    assert eulerian_poly(1).coeffs == (1,)
    assert eulerian_poly(2).coeffs == (1,)
    assert eulerian_poly(3).coeffs == (Fraction(1, 2), Fraction(1, 2))


@pytest.mark.parametrize("k", range(2, 21))
def test_eulerian_at_one(k):
    assert eulerian_poly(k)(Fraction(1)) == 1


def test_zeta_q_examples():
    assert zeta_q(2, 5).coeffs == (0, 1, 3, 4, 7, 6)
    assert zeta_q(4, 2).coeffs == (0, Fraction(1, 6), Fraction(9, 6))
    assert zeta_q(1, 4).coeffs == (0, 1, 2, 2, 3)


@pytest.mark.parametrize("k", [1, 2, 3, 5, 8])
def test_zeta_q_two_paths(k):
    assert zeta_q(k, 60) == zeta_q_from_eulerian(k, 60)


def test_zeta_hat_minimal_exponent():
    # smallest exponent is (1+2)*1 + 2*1 = 5
    assert zeta_hat_q(2, 2, 8).coeffs == (0, 0, 0, 0, 0, 1, 0, 3, 3)


@pytest.mark.parametrize("r,s", [(1, 2), (2, 2), (3, 4), (5, 7)])
def test_zeta_hat_matches_brute_force(r, s):
    assert zeta_hat_q(r, s, 30) == brute_zeta_hat(r, s, 30)


def test_zeta_hat_product_form():
    assert zeta_hat_q(5, 7, 120) == zeta_hat_q_product(5, 7, 120)
    assert zeta_hat_q(1, 3, 120) == zeta_hat_q_product(1, 3, 120)


def test_parity_split():
    N = 40
    for k in (2, 3, 6):
        assert zeta_q_parity(k, "even", N) + zeta_q_parity(k, "odd", N) == zeta_q(k, N)
    assert zeta_q_parity(2, "odd", 4).coeffs == (0, 1, 1, 4, 1)
    with pytest.raises(ValueError):
        zeta_q_parity(2, "any", 4)


def test_eta_oracle():
    assert eta_delta(6).coeffs == (0, 1, -24, 252, -1472, 4830, -6048)


def test_tau_multiplicative():
    d = eta_delta(60)
    assert d[6] == d[2] * d[3]
    assert d[4] == d[2] ** 2 - 2**11
    assert d[20] == d[4] * d[5]


def test_eisenstein_series():
    E4 = eisenstein_series(4, 3)
    assert E4.coeffs == (Fraction(1, 240), 1, 9, 28)
    with pytest.raises(ValueError):
        eisenstein_series(5, 3)


def test_q_derivative_and_linear_combination():
    s = zeta_q(2, 4)
    assert q_derivative(s).coeffs == (0, 1, 6, 12, 28)
    lc = linear_combination([(2, s), (-1, s)], 3)
    assert lc == s.truncate(3)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4))
def test_zeta_hat_no_constant_term(r, s):
    z = zeta_hat_q(r, s, 10)
    assert z[0] == 0 and all(z[i] == 0 for i in range(5))

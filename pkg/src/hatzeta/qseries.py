"""Truncated q-expansions with exact rational coefficients.

A :class:`QSeries` holds the coefficients of q^0..q^N.  Binary operations on
series of different orders truncate to the smaller order; nothing is padded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from .algebra import divisor_sigma, bernoulli_plus

__all__ = [
    "QSeries",
    "series_combine",
    "q_derivative",
    "EulerianPoly",
    "eulerian_poly",
    "zeta_q",
    "zeta_q_from_eulerian",
    "zeta_hat_q",
    "zeta_hat_q_product",
    "zeta_q_parity",
    "eta_delta",
    "eisenstein_series",
]


class QSeries:
    """Coefficients c_0..c_N of a power series in q, known up to q^N."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        c = tuple(Fraction(x) for x in coeffs)
        if not c:
            raise ValueError("a QSeries needs at least the constant coefficient")
        self._coeffs = c

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls([0] * (order + 1))

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> QSeries:
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(c)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> QSeries:
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient q^{n} is beyond the truncation order {self.order}")
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return QSeries._raw(self._coeffs[: order + 1])

    def __add__(self, other):
        if isinstance(other, QSeries):
            n = min(self.order, other.order) + 1
            return QSeries._raw(tuple(a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n])))
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, QSeries):
            n = min(self.order, other.order) + 1
            return QSeries._raw(tuple(a - b for a, b in zip(self._coeffs[:n], other._coeffs[:n])))
        return NotImplemented

    def __neg__(self):
        return QSeries._raw(tuple(-a for a in self._coeffs))

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_combine("mul", self, other)
        if isinstance(other, (int, Fraction)):
            return series_combine("scale", self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def first_mismatch(self, other: QSeries) -> int | None:
        """Smallest exponent where the two series differ (common order only)."""
        for n, (a, b) in enumerate(zip(self._coeffs, other._coeffs)):
            if a != b:
                return n
        return None

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"QSeries([{shown}{more}], order={self.order})"


def series_combine(op: str, lhs: QSeries, rhs: QSeries | Fraction | int) -> QSeries:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "scale":
        s = Fraction(rhs)
        return QSeries._raw(tuple(s * a for a in lhs.coeffs))
    if op == "mul":
        if not isinstance(rhs, QSeries):
            raise TypeError("mul needs two series")
        n = min(lhs.order, rhs.order)
        a, b = lhs.coeffs, rhs.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return QSeries._raw(tuple(out))
    raise ValueError(f"unknown series operation {op!r}")


def linear_combination(terms: Sequence[tuple[Fraction | int, QSeries]], order: int) -> QSeries:
    """sum of c*S truncated at ``order``; every S must reach that order."""
    acc = [Fraction(0)] * (order + 1)
    for c, s in terms:
        if not c:
            continue
        if s.order < order:
            raise ValueError(f"series of order {s.order} cannot feed order {order}")
        c = Fraction(c)
        sc = s.coeffs
        for n in range(order + 1):
            if sc[n]:
                acc[n] += c * sc[n]
    return QSeries._raw(tuple(acc))


def q_derivative(s: QSeries) -> QSeries:
    """q d/dq, coefficientwise multiplication by the exponent."""
    return QSeries._raw(tuple(n * c for n, c in enumerate(s.coeffs)))


@dataclass(frozen=True)
class EulerianPoly:
    """Q_k(t) stored as coefficients of t^1..t^deg."""

    weight: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, t):
        return sum(c * t ** (i + 1) for i, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)


@lru_cache(maxsize=None)
def eulerian_poly(k: int) -> EulerianPoly:
    if k < 1:
        raise ValueError("k must be >= 1")
    deg = max(1, k - 1)
    # (1-t)^k * sum_{d>0} d^(k-1) t^d / (k-1)!, kept to degree 2*deg to see the vanishing tail
    top = 2 * deg + 1
    rhs = [Fraction(0)] + [Fraction(d ** (k - 1), factorial(k - 1)) for d in range(1, top + 1)]
    onemt = [(-1) ** i * comb(k, i) for i in range(k + 1)]
    prod = [Fraction(0)] * (top + 1)
    for i, a in enumerate(onemt):
        for j in range(top + 1 - i):
            prod[i + j] += a * rhs[j]
    if prod[0] != 0 or any(prod[deg + 1 :]):
        raise ArithmeticError(f"Eulerian polynomial Q_{k} has unexpected terms beyond degree {deg}")
    return EulerianPoly(k, tuple(prod[1 : deg + 1]))


def zeta_q(k: int, order: int) -> QSeries:
    """sum_{n>0} Q_k(q^n)/(1-q^n)^k, i.e. sigma_{k-1}(n)/(k-1)! at q^n."""
    if k < 1:
        raise ValueError("k must be >= 1")
    f = factorial(k - 1)
    return QSeries([0] + [Fraction(divisor_sigma(k - 1, n), f) for n in range(1, order + 1)])


@lru_cache(maxsize=4096)
def _rational_in_power(k: int, m: int, order: int) -> tuple[Fraction, ...]:
    """Coefficients of Q_k(x)/(1-x)^k at x = q^m, built from the Eulerian polynomial
    and the binomial series of (1-x)^-k (independent of the divisor-sum route)."""
    Q = eulerian_poly(k).coeffs
    jmax = order // m
    inv = [comb(j + k - 1, k - 1) for j in range(jmax + 1)]
    ser = [Fraction(0)] * (jmax + 1)
    for i, c in enumerate(Q, start=1):
        for j in range(jmax + 1 - i):
            ser[i + j] += c * inv[j]
    out = [Fraction(0)] * (order + 1)
    for j, c in enumerate(ser):
        out[j * m] = c
    return tuple(out)


def zeta_q_from_eulerian(k: int, order: int) -> QSeries:
    """zeta_q(k) summed term by term from its defining rational functions."""
    acc = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        for e, c in enumerate(_rational_in_power(k, n, order)):
            if c:
                acc[e] += c
    return QSeries(acc)


@lru_cache(maxsize=256)
def _zeta_hat_int(r: int, s: int, order: int) -> tuple[int, ...]:
    # sum over a > c > 0, b, d > 0 of b^(r-1) d^(s-1) q^((a+c)b + ad)
    acc = [0] * (order + 1)
    bpow = [b ** (r - 1) for b in range(order + 1)]
    dpow = [d ** (s - 1) for d in range(order + 1)]
    b = 1
    while 3 * b + 2 <= order:  # smallest (a,c,d) = (2,1,1)
        bw = bpow[b]
        c = 1
        while (2 * c + 1) * b + (c + 1) <= order:
            a = c + 1
            while True:
                base = (a + c) * b
                if base + a > order:
                    break
                e = base + a
                d = 1
                while e <= order:
                    acc[e] += bw * dpow[d]
                    d += 1
                    e += a
                a += 1
            c += 1
        b += 1
    return tuple(acc)


def zeta_hat_q(r: int, s: int, order: int) -> QSeries:
    """q-analogue of the modified double zeta value, from the quadruple sum."""
    if r < 1 or s < 1:
        raise ValueError("r and s must be >= 1")
    den = factorial(r - 1) * factorial(s - 1)
    return QSeries._raw(tuple(Fraction(x, den) for x in _zeta_hat_int(r, s, order)))


def zeta_hat_q_product(r: int, s: int, order: int) -> QSeries:
    """Same series from the product form sum_{a>c>0} Q_r(q^(a+c))/(1-q^(a+c))^r Q_s(q^a)/(1-q^a)^s."""
    if r < 1 or s < 1:
        raise ValueError("r and s must be >= 1")
    acc = [Fraction(0)] * (order + 1)
    a = 2
    while a + (a + 1) <= order:
        sa = _rational_in_power(s, a, order)
        for c in range(1, a):
            m = a + c
            if m + a > order:
                break
            ra = _rational_in_power(r, m, order)
            for i in range(m, order + 1, m):
                if not ra[i]:
                    continue
                for j in range(a, order + 1 - i, a):
                    if sa[j]:
                        acc[i + j] += ra[i] * sa[j]
        a += 1
    return QSeries(acc)


def zeta_q_parity(k: int, parity: str, order: int) -> QSeries:
    """Divisor sums restricted to even or odd divisors, scaled by 1/(k-1)!."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    want = 0 if parity == "even" else 1
    acc = [0] * (order + 1)
    for d in range(1 + (1 - want), order + 1, 2):
        w = d ** (k - 1)
        for n in range(d, order + 1, d):
            acc[n] += w
    f = factorial(k - 1)
    return QSeries._raw(tuple(Fraction(x, f) for x in acc))


def eta_delta(order: int) -> QSeries:
    """q * prod_{n>=1} (1-q^n)^24, expanded directly."""
    if order < 1:
        raise ValueError("order must be >= 1")
    m = order - 1  # the prefactor q shifts everything by one
    p = [0] * (m + 1)
    p[0] = 1
    for n in range(1, m + 1):
        for i in range(m, n - 1, -1):
            p[i] -= p[i - n]

    def mul(x, y):
        out = [0] * (m + 1)
        for i, xi in enumerate(x):
            if xi:
                for j in range(m + 1 - i):
                    out[i + j] += xi * y[j]
        return out

    p2 = mul(p, p)
    p4 = mul(p2, p2)
    p8 = mul(p4, p4)
    p16 = mul(p8, p8)
    p24 = mul(p16, p8)
    return QSeries([0] + p24)


def eisenstein_series(k: int, order: int) -> QSeries:
    """-B_k/(2k) + sum sigma_{k-1}(n) q^n."""
    if k < 4 or k % 2:
        raise ValueError("k must be even and >= 4")
    const = -bernoulli_plus(k) / (2 * k)
    return QSeries([const] + [divisor_sigma(k - 1, n) for n in range(1, order + 1)])

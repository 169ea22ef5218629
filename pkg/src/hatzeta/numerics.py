"""Floating-point evaluation of zeta, double zeta and modified double zeta values
with explicit error bounds, and numeric checks of the real-valued relations.

Inner sums are evaluated in closed form (Euler-Maclaurin for power tails,
the asymptotic expansion of the harmonic numbers for r = 1), so no error is
accumulated along the outer index.  Outer tails are handled by bracketing the
inner sum between explicit power laws.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .algebra import bernoulli_plus
from .heckespace import RelationCoefficients
from .qseries import QSeries
from .report import RelationReport, timed

__all__ = [
    "NumResult",
    "BudgetExceeded",
    "OrderTooSmall",
    "zeta_num",
    "zeta_hat_num",
    "dzeta_num",
    "li_rs_minus1",
    "li_rs_minus1_parity",
    "power_tail",
    "verify_relation",
    "gkz_check",
    "sum_formula_check",
    "level2_check",
    "mdavasli_check",
    "harmonic_product_check",
    "oz_sum_check",
    "q_limit_check",
]

EPS = np.finfo(float).eps
EULER_GAMMA = 0.57721566490153286061
LN2 = math.log(2.0)
MAX_TERMS = 1 << 22
_EM_START = 16  # Euler-Maclaurin is applied from this index on


class BudgetExceeded(RuntimeError):
    """Requested tolerance cannot be met within the term budget."""


class OrderTooSmall(ValueError):
    """Truncated series too short for the requested evaluation point."""


@dataclass(frozen=True)
class NumResult:
    value: float
    error_bound: float
    terms_used: int

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "error_bound", float(self.error_bound))
        object.__setattr__(self, "terms_used", int(self.terms_used))

    def __float__(self):
        return self.value


def _combine(*parts: tuple[float, NumResult]) -> tuple[float, float]:
    """Linear combination of results: (value, propagated error bound)."""
    v = math.fsum(c * r.value for c, r in parts)
    e = math.fsum(abs(c) * r.error_bound for c, r in parts) + 4 * EPS * math.fsum(abs(c * r.value) for c, r in parts)
    return v, e


# ---------------------------------------------------------------- power tails


def _em_tail(p: float, a: float) -> tuple[float, float]:
    """sum_{n>=0} (a+n)^-p for a >= _EM_START by Euler-Maclaurin.

    For x^-p the remainder is bounded by the first omitted correction term.
    """
    val = a ** (1 - p) / (p - 1) + 0.5 * a ** (-p)
    rising = p  # p (p+1) ... (p + 2j - 2)
    err = 0.0
    for j in range(1, 8):
        B = float(bernoulli_plus(2 * j))
        term = B / math.factorial(2 * j) * rising * a ** (-p - 2 * j + 1)
        if j == 7:
            err = abs(term)
            break
        val += term
        rising *= (p + 2 * j - 1) * (p + 2 * j)
    return val, err + 4 * EPS * val


def power_tail(p: float, a: int) -> tuple[float, float]:
    """sum_{n>=a} n^-p with an error bound; a >= 1, p > 1."""
    if p <= 1:
        raise ValueError("power tails need p > 1")
    if a < 1:
        raise ValueError("a must be >= 1")
    head = 0.0
    if a < _EM_START:
        head = math.fsum(n ** (-p) for n in range(a, _EM_START))
        a = _EM_START
    v, e = _em_tail(p, float(a))
    return head + v, e + EPS * head


def _log_tail(s: float, a: int) -> tuple[float, float]:
    """sum_{n>=a} n^-s log n, Euler-Maclaurin to the f' term (a >= 64)."""
    head = 0.0
    if a < 64:
        head = math.fsum(n ** (-s) * math.log(n) for n in range(a, 64))
        a = 64
    la = math.log(a)
    integral = a ** (1 - s) * (la / (s - 1) + 1 / (s - 1) ** 2)
    f = a ** (-s) * la
    f1 = a ** (-s - 1) * (1 - s * la)
    f3 = a ** (-s - 3) * (-s * (s + 1) * (s + 2) * la + (s + 2) * (2 * s + 1) + s * (s + 1))
    val = integral + f / 2 - f1 / 12 + f3 / 720
    return head + val, abs(f3) / 720 + 4 * EPS * (abs(val) + head)


def _parity_power_tail(p: float, N: int, parity: str) -> tuple[float, float]:
    """sum over n > N with the given parity of n^-p."""
    full, ef = power_tail(p, N + 1)
    even_v, ee = power_tail(p, N // 2 + 1)
    even_v, ee = 2.0 ** (-p) * even_v, 2.0 ** (-p) * ee
    if parity == "any":
        return full, ef
    if parity == "even":
        return even_v, ee
    return full - even_v, ef + ee + 2 * EPS * full


def _parity_log_tail(s: float, N: int, parity: str) -> tuple[float, float]:
    """sum over n > N with the given parity of n^-s log n."""
    full, ef = _log_tail(s, N + 1)
    J = N // 2 + 1
    lt, el = _log_tail(s, J)
    pt, ep = power_tail(s, J)
    even_v = 2.0 ** (-s) * (LN2 * pt + lt)
    ee = 2.0 ** (-s) * (LN2 * ep + el)
    if parity == "any":
        return full, ef
    if parity == "even":
        return even_v, ee
    return full - even_v, ef + ee + 2 * EPS * full


# --------------------------------------------------------- harmonic numbers

_SMALL = 64


@lru_cache(maxsize=None)
def _small_harmonics(r: int) -> np.ndarray:
    """Exact-rounded H^(r)_j for 0 <= j < _SMALL."""
    out = np.zeros(_SMALL)
    acc = Fraction(0)
    for j in range(1, _SMALL):
        acc += Fraction(1, j**r)
        out[j] = float(acc)
    return out


def _harmonic1(j: np.ndarray) -> np.ndarray:
    """H_j for integer arrays j >= 0, asymptotic formula beyond the exact table."""
    j = np.asarray(j, dtype=np.int64)
    out = np.empty(j.shape, dtype=float)
    small = j < _SMALL
    out[small] = _small_harmonics(1)[j[small]]
    x = j[~small].astype(float)
    x2 = x * x
    out[~small] = np.log(x) + EULER_GAMMA + 0.5 / x - 1 / (12 * x2) + 1 / (120 * x2 * x2) - 1 / (252 * x2 * x2 * x2)
    return out


def _hurwitz_tail_array(r: int, a: np.ndarray) -> np.ndarray:
    """sum_{n>=a} n^-r for an integer array a >= _SMALL."""
    x = a.astype(float)
    val = x ** (1 - r) / (r - 1) + 0.5 * x ** (-r)
    rising = float(r)
    for j in range(1, 7):
        B = float(bernoulli_plus(2 * j))
        val += B / math.factorial(2 * j) * rising * x ** (-r - 2 * j + 1)
        rising *= (r + 2 * j - 1) * (r + 2 * j)
    return val


def _harmonic(r: int, j: np.ndarray) -> np.ndarray:
    """H^(r)_j = sum_{m<=j} m^-r."""
    if r == 1:
        return _harmonic1(j)
    j = np.asarray(j, dtype=np.int64)
    out = np.empty(j.shape, dtype=float)
    small = j < _SMALL
    out[small] = _small_harmonics(r)[j[small]]
    z = zeta_num(r).value
    out[~small] = z - _hurwitz_tail_array(r, j[~small] + 1)
    return out


def _parity_harmonic(r: int, j: np.ndarray, parity: str) -> np.ndarray:
    """sum of m^-r over 1 <= m <= j with m of the given parity."""
    j = np.asarray(j, dtype=np.int64)
    if parity == "any":
        return _harmonic(r, j)
    even = 2.0 ** (-r) * _harmonic(r, j // 2)
    if parity == "even":
        return even
    return _harmonic(r, j) - even


# ------------------------------------------------------------------- zeta(k)


def zeta_num(k: int) -> NumResult:
    if k < 2:
        raise ValueError("k must be >= 2")
    return _zeta_num(int(k))


@lru_cache(maxsize=None)
def _zeta_num(k: int) -> NumResult:
    head = math.fsum(n ** (-k) for n in range(1, _EM_START))
    tail, err = _em_tail(float(k), float(_EM_START))
    v = head + tail
    return NumResult(v, err + 2 * EPS * v, _EM_START - 1)


# ------------------------------------------------------------ modified dzv


def _choose_terms(bound, tol: float, start: int = 256) -> int:
    N = start
    while bound(N) > tol / 2:
        N *= 2
        if N > MAX_TERMS:
            raise BudgetExceeded(f"tolerance {tol:g} needs more than {MAX_TERMS} terms")
    return N


def _g1_tail_coeffs(order: int = 12) -> list[float]:
    # n^0..n^-order coefficients of ln(2-1/n) + 1/(2(2n-1)) - 1/(2n) - 1/(12(2n-1)^2) + 1/(12n^2)
    a = [0.0] * (order + 1)
    a[0] = LN2
    for i in range(1, order + 1):
        a[i] -= 2.0 ** (-i) / i
    for i in range(0, order):
        a[i + 1] += 0.25 * 2.0 ** (-i)
    a[1] -= 0.5
    for i in range(0, order - 1):
        a[i + 2] -= (i + 1) * 2.0 ** (-i) / 48
    a[2] += 1 / 12
    return a


def _zeta_hat_terms(r: int, s: int, N: int) -> np.ndarray:
    n = np.arange(2, N + 1, dtype=np.int64)
    g = _harmonic(r, 2 * n - 1) - _harmonic(r, n)
    return g * n.astype(float) ** (-s)


def zeta_hat_num(r: int, s: int, tol: float = 1e-13) -> NumResult:
    """sum_{0<m<n} (m+n)^-r n^-s to absolute accuracy ``tol``."""
    if r < 1 or s < 2:
        raise ValueError("need r >= 1 and s >= 2")
    if tol <= 0:
        raise ValueError("tol must be positive")
    k = r + s
    if r == 1:
        # g(n) = H_{2n-1} - H_n = A(n) + O(n^-4 / 120), A expanded in powers of 1/n
        N = _choose_terms(lambda N: power_tail(s + 4, N + 1)[0] / 120 + 2 * power_tail(s + 13, N + 1)[0], tol, 1024)
        coeffs = _g1_tail_coeffs()
        tail, err = 0.0, power_tail(s + 4, N + 1)[0] / 120 + 2 * power_tail(s + 13, N + 1)[0]
        for i, a in enumerate(coeffs):
            t, e = power_tail(s + i, N + 1)
            tail += a * t
            err += abs(a) * e
    else:
        # (r-1) g(n) in [(1-2^(1-r)) n^(1-r) - (r-1) n^-r, (1-2^(1-r)) n^(1-r)]
        N = _choose_terms(lambda N: power_tail(k, N + 1)[0] / 2, tol)
        c = (1 - 2.0 ** (1 - r)) / (r - 1)
        t1, e1 = power_tail(k - 1, N + 1)
        t2, e2 = power_tail(k, N + 1)
        tail = c * t1 - t2 / 2
        err = t2 / 2 + c * e1 + e2
    terms = _zeta_hat_terms(r, s, N)
    head = math.fsum(terms)
    v = head + tail
    err += 8 * EPS * (abs(head) + abs(tail)) + _inner_rounding(r, s, N)
    return NumResult(v, err, N)


def _inner_rounding(r: int, s: int, N: int) -> float:
    # each closed-form inner sum is accurate to a few ulps of its size
    size = math.log(2 * N) + 1 if r == 1 else zeta_num(r).value
    return 8 * EPS * size * zeta_num(s).value


# -------------------------------------------------------- classical / level 2

_PARITIES = ("any", "odd", "even")


def _inner_constant(r: int, parity: str) -> float:
    z = zeta_num(r).value
    if parity == "any":
        return z
    if parity == "even":
        return 2.0 ** (-r) * z
    return (1 - 2.0 ** (-r)) * z


def _r1_asymptotics(m_parity: str) -> tuple[float, float]:
    # sum_{m<n, parity} 1/m = alpha log n + beta + delta(n)/n + O(n^-2)
    if m_parity == "any":
        return 1.0, EULER_GAMMA
    if m_parity == "odd":
        return 0.5, 0.5 * (EULER_GAMMA + LN2)
    return 0.5, 0.5 * (EULER_GAMMA - LN2)


def _r1_delta(m_parity: str, n_parity: str) -> float:
    return {"any": -0.5, "even": {"even": -0.5, "odd": 0.0}, "odd": {"even": 0.0, "odd": -0.5}}[m_parity][n_parity] if m_parity != "any" else -0.5


def dzeta_num(r: int, s: int, m_parity: str = "any", n_parity: str = "any", tol: float = 1e-13) -> NumResult:
    """sum over 0 < m < n (parity-restricted) of m^-r n^-s."""
    if r < 1 or s < 2:
        raise ValueError("need r >= 1 and s >= 2")
    if m_parity not in _PARITIES or n_parity not in _PARITIES:
        raise ValueError(f"parity must be one of {_PARITIES}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    k = r + s
    if r == 1:
        N = _choose_terms(lambda N: power_tail(s + 2, N + 1)[0], tol, 1024)
        alpha, beta = _r1_asymptotics(m_parity)
        L, eL = _parity_log_tail(s, N, n_parity)
        P, eP = _parity_power_tail(s, N, n_parity)
        tail = alpha * L + beta * P
        err = alpha * eL + abs(beta) * eP
        n_pars = ("even", "odd") if n_parity == "any" else (n_parity,)
        for npar in n_pars:
            d = _r1_delta(m_parity, npar)
            if d:
                t, e = _parity_power_tail(s + 1, N, npar)
                tail += d * t
                err += abs(d) * e
        err += power_tail(s + 2, N + 1)[0]
    else:
        # J(n) = sum_{m>=n, parity} m^-r lies within n^-r of w n^(1-r)/(r-1)
        N = _choose_terms(lambda N: power_tail(k, N + 1)[0], tol)
        C = _inner_constant(r, m_parity)
        w = 1.0 if m_parity == "any" else 0.5
        Ps, e1 = _parity_power_tail(s, N, n_parity)
        Pk1, e2 = _parity_power_tail(k - 1, N, n_parity)
        Pk, e3 = _parity_power_tail(k, N, n_parity)
        tail = C * Ps - w / (r - 1) * Pk1
        err = Pk + C * e1 + w / (r - 1) * e2 + e3 + EPS * C * Ps
    n = np.arange(2, N + 1, dtype=np.int64)
    if n_parity == "even":
        n = n[n % 2 == 0]
    elif n_parity == "odd":
        n = n[n % 2 == 1]
    inner = _parity_harmonic(r, n - 1, m_parity)
    head = math.fsum(inner * n.astype(float) ** (-s))
    v = head + tail
    err += 8 * EPS * (abs(head) + abs(tail)) + _inner_rounding(r, s, N)
    return NumResult(v, err, N)


# ------------------------------------------------------------ Li_{r,s}(-1)


def li_rs_minus1(r: int, s: int, tol: float = 1e-12, levels: int = 24) -> NumResult:
    """sum_{0<m<n} (-1)^n m^-r n^-s, alternating sum accelerated by iterated
    averaging of consecutive partial sums.

    The last two averaged values bracket the limit when the terms are
    eventually completely monotone; their gap is reported as the error bound.
    """
    if r < 1 or s < 1 or (r, s) == (1, 1):
        raise ValueError("need r >= 1, s >= 1 and (r, s) != (1, 1)")
    N = 64
    while True:
        n = np.arange(2, N + 1, dtype=np.int64)
        a = _harmonic(r, n - 1) * n.astype(float) ** (-s)
        signed = np.where(n % 2 == 0, a, -a)
        partial = np.cumsum(signed)
        seq = partial[-(levels + 1) :].astype(float)
        while len(seq) > 2:
            seq = 0.5 * (seq[1:] + seq[:-1])
        v = 0.5 * (seq[0] + seq[1])
        err = 0.5 * abs(seq[1] - seq[0]) + 4 * EPS * N * float(np.max(np.abs(partial)))
        if err <= tol:
            return NumResult(float(v), float(err), N)
        N *= 2
        if N > MAX_TERMS:
            raise BudgetExceeded(f"Li_{{{r},{s}}}(-1) to {tol:g} needs more than {MAX_TERMS} terms")


def li_rs_minus1_parity(r: int, s: int, tol: float = 1e-13) -> NumResult:
    """Same value through the even-n and odd-n restricted double zetas."""
    even = dzeta_num(r, s, "any", "even", tol)
    odd = dzeta_num(r, s, "any", "odd", tol)
    v, e = _combine((1, even), (-1, odd))
    return NumResult(v, e, max(even.terms_used, odd.terms_used))


# ----------------------------------------------------------------- reports


def _relation_report(name: str, params: dict, lhs: float, rhs: float, err: float, tol: float, scale: float | None = None) -> RelationReport:
    scale = abs(rhs) if scale is None else scale
    if scale == 0:
        scale = 1.0
    res = abs(lhs - rhs) / scale
    bound = err / scale
    ok = res <= tol and bound <= tol
    detail = f"lhs={lhs:.15g} rhs={rhs:.15g} rel_residual={res:.3e} error_bound={bound:.3e} tol={tol:g}"
    return RelationReport(name, params, "pass" if ok else "fail", detail)


def _pair_tol(tol: float, scale: float, weight_sum: float) -> float:
    return max(tol * abs(scale) / (20 * max(weight_sum, 1.0)), 1e-300)


def verify_relation(coeffs: RelationCoefficients, tol: float = 1e-8) -> RelationReport:
    """sum_{r,s>=2} q_{r,s} zetahat(r,s) = lambda zeta(k), relative residual <= tol."""
    k = coeffs.weight
    params = {"k": k, "tol": tol}
    report = RelationReport("relation", params)
    with timed(report):
        z = zeta_num(k)
        lam = float(coeffs.lam)
        rhs = lam * z.value
        terms = {rs: v for rs, v in coeffs.qrs.items() if v and rs[0] >= 2 and rs[1] >= 2}
        if not terms:
            report.status = "fail"
            report.detail = "non-relation: restricted period polynomial vanishes (Eisenstein), lhs = 0 != lambda zeta(k)"
            return report
        wsum = sum(abs(float(v)) for v in terms.values())
        ptol = _pair_tol(tol, rhs, wsum)
        parts = [(float(v), zeta_hat_num(r, s, ptol)) for (r, s), v in sorted(terms.items())]
        lhs, err = _combine(*parts)
        err += abs(lam) * z.error_bound
        out = _relation_report("relation", params, lhs, rhs, err, tol)
        report.status, report.detail = out.status, out.detail
    return report


def gkz_check(coeffs: RelationCoefficients, tol: float = 1e-6) -> RelationReport:
    """sum over odd r, s >= 3 of q_{r,s} zeta(r,s) = beta zeta(k)."""
    k = coeffs.weight
    params = {"k": k, "tol": tol}
    report = RelationReport("gkz", params)
    with timed(report):
        z = zeta_num(k)
        rhs = float(coeffs.beta) * z.value
        terms = {rs: v for rs, v in coeffs.qrs.items() if v and rs[0] >= 3 and rs[1] >= 3 and rs[0] % 2 and rs[1] % 2}
        wsum = sum(abs(float(v)) for v in terms.values())
        ptol = _pair_tol(tol, rhs, wsum)
        parts = [(float(v), dzeta_num(r, s, tol=ptol)) for (r, s), v in sorted(terms.items())]
        lhs, err = _combine(*parts)
        err += abs(float(coeffs.beta)) * z.error_bound
        out = _relation_report("gkz", params, lhs, rhs, err, tol)
        report.status, report.detail = out.status, out.detail
    return report


def sum_formula_check(k: int, tol: float = 1e-8) -> RelationReport:
    """zeta(k) = 2^(k-1) sum_{r>=1, s>=2, r+s=k} zetahat(r,s)."""
    if k < 3:
        raise ValueError("k must be >= 3")
    params = {"k": k, "tol": tol}
    report = RelationReport("sumformula", params)
    with timed(report):
        z = zeta_num(k)
        ptol = _pair_tol(tol, z.value, 2.0 ** (k - 1) * (k - 2))
        parts = [(2.0 ** (k - 1), zeta_hat_num(r, k - r, ptol)) for r in range(1, k - 1)]
        lhs, err = _combine(*parts)
        out = _relation_report("sumformula", params, lhs, z.value, err + z.error_bound, tol)
        report.status, report.detail = out.status, out.detail
    return report


def level2_check(r: int, s: int, tol: float = 1e-8) -> RelationReport:
    """zetahat(r,s) = 2^s (zeta^oe + zeta^ee)(r,s) - zeta(r,s) - zeta(r+s)."""
    params = {"r": r, "s": s, "tol": tol}
    report = RelationReport("level2", params)
    with timed(report):
        zh = zeta_hat_num(r, s, 1e-14)
        oe = dzeta_num(r, s, "odd", "even", 1e-14)
        ee = dzeta_num(r, s, "even", "even", 1e-14)
        dz = dzeta_num(r, s, tol=1e-14)
        zk = zeta_num(r + s)
        rhs, err = _combine((2.0**s, oe), (2.0**s, ee), (-1, dz), (-1, zk))
        out = _relation_report("level2", params, zh.value, rhs, err + zh.error_bound, tol)
        report.status, report.detail = out.status, out.detail
    return report


def mdavasli_check(r: int, s: int, tol: float = 1e-8) -> RelationReport:
    """zetahat(r,s) = 2^(s-1) (Li_{r,s}(-1) + zeta(r,s)) - zeta(r,s) - zeta(r+s)."""
    params = {"r": r, "s": s, "tol": tol}
    report = RelationReport("mdavasli", params)
    with timed(report):
        zh = zeta_hat_num(r, s, 1e-14)
        li = li_rs_minus1(r, s, 1e-13)
        dz = dzeta_num(r, s, tol=1e-14)
        zk = zeta_num(r + s)
        rhs, err = _combine((2.0 ** (s - 1), li), (2.0 ** (s - 1) - 1, dz), (-1, zk))
        out = _relation_report("mdavasli", params, zh.value, rhs, err + zh.error_bound, tol)
        report.status, report.detail = out.status, out.detail
    return report


def harmonic_product_check(a: int, b: int, tol: float = 1e-7) -> RelationReport:
    """zeta(2a) zeta(2b) = zeta(2a,2b) + zeta(2b,2a) + zeta(2a+2b)."""
    params = {"a": a, "b": b, "tol": tol}
    report = RelationReport("harmonic", params)
    with timed(report):
        za, zb = zeta_num(2 * a), zeta_num(2 * b)
        lhs = za.value * zb.value
        lerr = za.error_bound * zb.value + zb.error_bound * za.value
        rhs, err = _combine((1, dzeta_num(2 * a, 2 * b)), (1, dzeta_num(2 * b, 2 * a)), (1, zeta_num(2 * a + 2 * b)))
        out = _relation_report("harmonic", params, lhs, rhs, err + lerr, tol)
        report.status, report.detail = out.status, out.detail
    return report


def oz_sum_check(k: int, weighted: bool = False, tol: float = 1e-7) -> RelationReport:
    """sum zeta(r,s) = zeta(k), or sum 2^(s-1) zeta(r,s) = (k+1)/2 zeta(k)."""
    params = {"k": k, "weighted": int(weighted), "tol": tol}
    report = RelationReport("oz", params)
    with timed(report):
        z = zeta_num(k)
        parts = [((2.0 ** (k - r - 1) if weighted else 1.0), dzeta_num(r, k - r)) for r in range(1, k - 1)]
        lhs, err = _combine(*parts)
        c = (k + 1) / 2 if weighted else 1.0
        out = _relation_report("oz", params, lhs, c * z.value, err + c * z.error_bound, tol)
        report.status, report.detail = out.status, out.detail
    return report


def _eval_truncated(series: QSeries, q: float, weight: int, growth: float) -> tuple[float, float]:
    """(1-q)^weight * sum c_n q^n and a geometric tail estimate beyond the order."""
    N = series.order
    c = np.array([float(x) for x in series.coeffs])
    n = np.arange(N + 1, dtype=float)
    pref = (1 - q) ** weight
    val = pref * math.fsum(c * q**n)
    nz = n[1:]
    A = float(np.max(np.abs(c[1:]) / nz**growth)) if N >= 1 else 0.0
    rho = (1 + 1 / N) ** growth * q
    if rho >= 1:
        raise OrderTooSmall(f"order {N} too small for q = {q}")
    tail = pref * A * (N + 1) ** growth * q ** (N + 1) / (1 - rho)
    return val, tail


def q_limit_check(
    k: int,
    series: QSeries,
    target: float,
    qs: Sequence[float] = (0.9, 0.95, 0.99),
    rel_tol: float = 0.1,
    abs_tol: float | None = None,
    growth: float | None = None,
    name: str = "qlimit",
) -> RelationReport:
    """Evaluate (1-q)^k * series at q -> 1 and compare with the expected limit.

    With ``abs_tol`` the last value must be below it in absolute value;
    otherwise the distance to ``target`` must shrink monotonically and end
    within ``rel_tol`` of it.
    """
    # coefficients are assumed to grow at most like n^growth
    growth = float(k) if growth is None else growth
    params = {"k": k, "order": series.order, "target": f"{target:.12g}"}
    report = RelationReport(name, params)
    with timed(report):
        vals = []
        for q in qs:
            v, tail = _eval_truncated(series, q, k, growth)
            allowed = 0.01 * (abs_tol if abs_tol is not None else rel_tol * abs(target))
            if tail > allowed:
                raise OrderTooSmall(f"order {series.order} leaves tail {tail:.2e} at q = {q}")
            vals.append(v)
        dist = [abs(v - target) for v in vals]
        if abs_tol is not None:
            ok = abs(vals[-1]) < abs_tol
        else:
            monotone = all(d2 <= d1 for d1, d2 in zip(dist, dist[1:]))
            ok = monotone and dist[-1] <= rel_tol * abs(target)
        report.status = "pass" if ok else "fail"
        report.detail = " ".join(f"q={q}:{v:.6g}" for q, v in zip(qs, vals))
    return report

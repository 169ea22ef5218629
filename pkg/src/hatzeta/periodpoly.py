"""Homogeneous polynomials of degree k-2, the matrix action on them, the Hecke
elements T~_n with their three-part split, and the pairing <P, T>.

A :class:`HomPoly` of weight k stores c_0..c_{k-2} for sum c_i X^(k-2-i) Y^i.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import HeckeElement, Mat2, divisors as _divisors, format_rational, parse_rational
from .qseries import QSeries

__all__ = [
    "HomPoly",
    "S",
    "U",
    "act_matrix",
    "act_element",
    "hecke_element",
    "hecke_full",
    "pairing",
    "pairing_series",
    "is_in_Wk",
    "poly_to_json",
    "poly_from_json",
]

S = Mat2(0, -1, 1, 0)
U = Mat2(1, -1, 1, 0)


class HomPoly:
    """Homogeneous polynomial in X, Y of degree ``weight - 2``."""

    __slots__ = ("weight", "coeffs")

    def __init__(self, weight: int, coeffs: Iterable[Fraction | int]):
        c = tuple(Fraction(x) for x in coeffs)
        if weight < 2:
            raise ValueError("weight must be >= 2")
        if len(c) != weight - 1:
            raise ValueError(f"weight {weight} needs {weight - 1} coefficients, got {len(c)}")
        self.weight = weight
        self.coeffs = c

    @property
    def degree(self) -> int:
        return self.weight - 2

    @classmethod
    def zero(cls, weight: int) -> HomPoly:
        return cls(weight, [0] * (weight - 1))

    @classmethod
    def from_monomials(cls, weight: int, terms: dict[tuple[int, int], Fraction | int]) -> HomPoly:
        """Build from {(x_exp, y_exp): coeff}."""
        c = [Fraction(0)] * (weight - 1)
        for (x, y), v in terms.items():
            if x < 0 or y < 0 or x + y != weight - 2:
                raise ValueError(f"monomial X^{x} Y^{y} is not of degree {weight - 2}")
            c[y] += Fraction(v)
        return cls(weight, c)

    def coeff(self, x: int, y: int) -> Fraction:
        """Coefficient of X^x Y^y."""
        if x + y != self.degree or x < 0 or y < 0:
            raise ValueError(f"X^{x} Y^{y} is not of degree {self.degree}")
        return self.coeffs[y]

    def monomials(self) -> dict[tuple[int, int], Fraction]:
        m = self.degree
        return {(m - i, i): c for i, c in enumerate(self.coeffs) if c}

    def __call__(self, x, y):
        m = self.degree
        return sum(c * x ** (m - i) * y**i for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other: HomPoly) -> HomPoly:
        self._check(other)
        return HomPoly(self.weight, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: HomPoly) -> HomPoly:
        self._check(other)
        return HomPoly(self.weight, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> HomPoly:
        return HomPoly(self.weight, [-a for a in self.coeffs])

    def __mul__(self, scalar) -> HomPoly:
        if isinstance(scalar, (int, Fraction)):
            return HomPoly(self.weight, [scalar * a for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.weight == other.weight and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.weight, self.coeffs))

    def _check(self, other):
        if other.weight != self.weight:
            raise ValueError("weights differ")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def even_part(self) -> HomPoly:
        """Keep X^(k-2-i) Y^i with i even (both exponents even)."""
        return HomPoly(self.weight, [c if i % 2 == 0 else 0 for i, c in enumerate(self.coeffs)])

    def odd_part(self) -> HomPoly:
        return HomPoly(self.weight, [c if i % 2 else 0 for i, c in enumerate(self.coeffs)])

    def is_even(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2)

    def integer_form(self) -> tuple[list[int], int]:
        """(integer coefficients, common denominator)."""
        den = math.lcm(*(c.denominator for c in self.coeffs))
        return [int(c * den) for c in self.coeffs], den

    def __repr__(self):
        if self.is_zero():
            return f"HomPoly(weight={self.weight}, 0)"
        parts = []
        for (x, y), c in sorted(self.monomials().items(), reverse=True):
            parts.append(f"{c}*X^{x}*Y^{y}")
        return f"HomPoly(weight={self.weight}, {' + '.join(parts)})"


def _poly_mul(p: Sequence, q: Sequence) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def act_matrix(P: HomPoly, g: Mat2) -> HomPoly:
    """(P|g)(X, Y) = P(aX + bY, cX + dY)."""
    m = P.degree
    # powers of the linear forms, as coefficient lists in Y^i (X is implicit)
    lin1, lin2 = [g.a, g.b], [g.c, g.d]
    pow1 = [[1]]
    pow2 = [[1]]
    for _ in range(m):
        pow1.append(_poly_mul(pow1[-1], lin1))
        pow2.append(_poly_mul(pow2[-1], lin2))
    out = [Fraction(0)] * (m + 1)
    for i, c in enumerate(P.coeffs):
        if not c:
            continue
        for j, v in enumerate(_poly_mul(pow1[m - i], pow2[i])):
            if v:
                out[j] += c * v
    return HomPoly(P.weight, out)


def act_element(P: HomPoly, T: HeckeElement) -> HomPoly:
    out = HomPoly.zero(P.weight)
    for alpha, g in T.terms:
        out = out + alpha * act_matrix(P, g)
    return out


@lru_cache(maxsize=1024)
def hecke_element(n: int) -> tuple[HeckeElement, HeckeElement, HeckeElement]:
    """The three parts of T~_n, each with all coefficients equal to 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t1: list[Mat2] = []
    # ad - bc = n with a > c > 0, d > -b > 0; write b = -e, so ad + ec = n
    c = 1
    while 3 * c + 2 <= n:  # smallest case a = c+1, e = 1, d = 2
        e = 1
        while e * c + (c + 1) * (e + 1) <= n:
            rest = n - e * c
            for a in _divisors(rest):
                if a > c and rest // a > e:
                    d = rest // a
                    t1.append(Mat2(a, -e, c, d))
                    t1.append(Mat2(a, e, -c, d))
            e += 1
        c += 1
    t2: list[Mat2] = []
    t3: list[Mat2] = []
    for a in range(1, n + 1):
        if n % a:
            continue
        d = n // a
        # -d/2 < b <= d/2
        for b in range(-((d - 1) // 2), d // 2 + 1):
            t2.append(Mat2(a, b, 0, d))
        for cc in range(-((a - 1) // 2), a // 2 + 1):
            if cc:
                t3.append(Mat2(a, 0, cc, d))
    return (
        HeckeElement.from_matrices(n, t1),
        HeckeElement.from_matrices(n, t2),
        HeckeElement.from_matrices(n, t3),
    )


def hecke_full(n: int) -> HeckeElement:
    t1, t2, t3 = hecke_element(n)
    return t1 + t2 + t3


def pairing(P: HomPoly, T: HeckeElement) -> Fraction:
    """<P, T> = sum alpha_g P(b, d)."""
    ints, den = P.integer_form()
    total = Fraction(0)
    for alpha, g in T.terms:
        total += alpha * _eval_int(ints, g.b, g.d)
    return total / den


def _eval_int(ints: Sequence[int], x: int, y: int) -> int:
    # homogeneous Horner: sum ints[i] x^(m-i) y^i
    acc = 0
    yp = 1
    for c in ints:
        acc = acc * x + c * yp
        yp *= y
    return acc


def pairing_series(P: HomPoly, order: int, part: int | None = None) -> QSeries:
    """sum_{1<=n<=order} <P, T~_n^(part)> q^n, or the full T~_n if ``part`` is None."""
    if part not in (None, 1, 2, 3):
        raise ValueError("part must be 1, 2, 3 or None")
    ints, den = P.integer_form()
    out = [Fraction(0)]
    for n in range(1, order + 1):
        parts = hecke_element(n)
        chosen = parts if part is None else (parts[part - 1],)
        tot = 0
        for T in chosen:
            for alpha, g in T.terms:
                tot += alpha * _eval_int(ints, g.b, g.d)
        out.append(Fraction(tot, den))
    return QSeries(out)


def is_in_Wk(P: HomPoly) -> bool:
    """P|(1+S) = 0 and P|(1+U+U^2) = 0."""
    if not (P + act_matrix(P, S)).is_zero():
        return False
    return (P + act_matrix(P, U) + act_matrix(P, U @ U)).is_zero()


def poly_to_json(P: HomPoly, **extra) -> str:
    mons = [
        {"x": x, "y": y, "coeff": format_rational(c)}
        for (x, y), c in sorted(P.monomials().items(), key=lambda t: (-t[0][0], t[0][1]))
    ]
    doc = {"weight": P.weight, "monomials": mons}
    doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True)


def poly_from_json(text: str | dict) -> HomPoly:
    doc = json.loads(text) if isinstance(text, str) else text
    try:
        k = int(doc["weight"])
        terms: dict[tuple[int, int], Fraction] = {}
        for m in doc["monomials"]:
            key = (int(m["x"]), int(m["y"]))
            terms[key] = terms.get(key, Fraction(0)) + parse_rational(m["coeff"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed period-polynomial document: {exc}") from exc
    return HomPoly.from_monomials(k, terms)

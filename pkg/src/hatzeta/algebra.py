"""Exact scalar arithmetic, 2x2 integer matrices and small exact linear algebra.

Rationals are :class:`fractions.Fraction`, which already keeps values reduced
with a positive denominator, so equality is structural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "binomial",
    "bernoulli_plus",
    "bernoulli_table",
    "divisor_sigma",
    "divisors",
    "Mat2",
    "HeckeElement",
    "nullspace",
    "nullspace_free",
    "charpoly",
    "poly_divide_linear",
]


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"num/den"`` or an integer string into a reduced rational."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    if "." in text or "e" in text.lower():
        raise ValueError(f"rational must be num/den, got {text!r}")
    return Fraction(text)


def format_rational(x: Fraction | int) -> str:
    return str(Fraction(x))


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return math.comb(n, k)


@lru_cache(maxsize=None)
def bernoulli_table(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n with B_1 = +1/2 (Akiyama-Tanigawa)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli_plus(j: int) -> Fraction:
    """Bernoulli number B_j in the convention B_1 = +1/2."""
    if j < 0:
        raise ValueError("j must be >= 0")
    # share one cached table; grow in blocks so repeated calls stay cheap
    size = max(32, 1 << (j.bit_length()))
    return bernoulli_table(size)[j]


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisor_sigma(p: int, n: int) -> int:
    """sum of d**p over the positive divisors d of n."""
    if p < 0:
        raise ValueError("p must be >= 0")
    return sum(d**p for d in divisors(n))


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))


IDENTITY = Mat2(1, 0, 0, 1)


@dataclass(frozen=True)
class HeckeElement:
    """Formal sum of integer matrices of common determinant ``n``."""

    n: int
    terms: tuple[tuple[Fraction, Mat2], ...] = ()

    def __post_init__(self):
        for _, m in self.terms:
            if m.det != self.n:
                raise ValueError(f"matrix {m} has determinant {m.det}, expected {self.n}")

    @classmethod
    def from_matrices(cls, n: int, matrices: Iterable[Mat2], coeff=1) -> HeckeElement:
        c = Fraction(coeff)
        return cls(n, tuple((c, m) for m in matrices))

    def __add__(self, other: HeckeElement) -> HeckeElement:
        if other.n != self.n:
            raise ValueError("cannot add Hecke elements of different determinant")
        return HeckeElement(self.n, self.terms + other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def matrices(self) -> list[Mat2]:
        return [m for _, m in self.terms]


def _row_echelon_int(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; pivots chosen in the first nonzero column,
    smallest row index. Rows are divided by their content after every update."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(len(m)):
            if i == r or m[i][col] == 0:
                continue
            f = m[i][col]
            row = [p * x - f * y for x, y in zip(m[i], m[r])]
            g = math.gcd(*row)
            m[i] = [x // g for x in row] if g > 1 else row
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(matrix: Sequence[Sequence[Fraction | int]], ncols: int | None = None) -> list[list[Fraction]]:
    """Exact right nullspace basis (see :func:`nullspace_free`)."""
    return nullspace_free(matrix, ncols)[0]


def nullspace_free(
    matrix: Sequence[Sequence[Fraction | int]], ncols: int | None = None
) -> tuple[list[list[Fraction]], list[int]]:
    """Nullspace basis together with its free columns.

    Basis vector i has a 1 at free column i and 0 at the other free columns,
    so coordinates of any vector in the span are its entries at those columns.
    """
    rows = [list(map(Fraction, r)) for r in matrix]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    int_rows = []
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        den = math.lcm(*(x.denominator for x in r)) if r else 1
        ir = [int(x * den) for x in r]
        if any(ir):
            int_rows.append(ir)
    ech, pivots = _row_echelon_int(int_rows) if int_rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(ech, pivots):
            v[pc] = Fraction(-row[fc], row[pc])
        basis.append(v)
    return basis, free


def charpoly(matrix: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Characteristic polynomial det(xI - M), coefficients from x^n down to x^0.

    Faddeev-LeVerrier; exact over the rationals.
    """
    n = len(matrix)
    M = [list(map(Fraction, r)) for r in matrix]
    coeffs = [Fraction(1)]
    if n == 0:
        return coeffs
    Mk = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    c = Fraction(1)
    for k in range(1, n + 1):
        # Mk <- M @ Mk_prev + c_{k-1} I, then c_k = -tr(M @ Mk)/k
        AM = [[sum(M[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(AM[i][i] for i in range(n)) / k
        coeffs.append(c)
        Mk = [[AM[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def poly_divide_linear(coeffs: Sequence[Fraction], root: Fraction) -> tuple[list[Fraction], Fraction]:
    """Synthetic division by (x - root); returns (quotient, remainder)."""
    out = []
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * root + c
        out.append(acc)
    return out[:-1], out[-1]

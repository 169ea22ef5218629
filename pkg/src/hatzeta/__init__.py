"""Exact q-analogues of modified double zeta values, Hecke operators on period
polynomials, and numeric checks of the resulting relations."""
from __future__ import annotations

from .algebra import HeckeElement, Mat2, Rational, bernoulli_plus, divisor_sigma, parse_rational
from .qseries import QSeries, eta_delta, zeta_hat_q, zeta_q, zeta_q_parity
from .periodpoly import HomPoly, hecke_element, pairing
from .heckespace import PeriodData, UnsupportedWeight, delta_example, eigen_split, relation_coefficients
from .report import RelationReport

__version__ = "0.1.0"

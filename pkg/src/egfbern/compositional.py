"""Compositional Bernoulli numbers and the two polynomial generalizations.

``C_{N,n}^f`` are the EGF coefficients of the compositional inverse of
``N! x**(1-N) (f - pi_N f)``.  ``C_{N,0}^f`` is stored as 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

from .catalog import SeriesName
from .errors import NonzeroConstant, OrderTooSmall, ZeroPivot
from .oracle.enumerate import compositions, multinomial
from .qseries import EgfSeries, PolySeries, QPolynomial, comp_inverse, shifted_normalized


@dataclass(frozen=True)
class CompBernoulliRow:
    f_descriptor: Union[SeriesName, EgfSeries, str]
    N: int
    values: tuple  # values[0] is C_{N,0} = 0

    def __getitem__(self, n):
        return self.values[n]

    def as_series(self) -> EgfSeries:
        return EgfSeries(self.values)


def comp_bernoulli_numbers(f: EgfSeries, N: int, T: int, descriptor=None) -> CompBernoulliRow:
    if N < 1:
        raise ValueError("N must be >= 1")
    if T < 1:
        raise ValueError("T must be >= 1")
    if f.order < N + T - 1:
        raise OrderTooSmall(f"need series order >= N + T - 1 = {N + T - 1}, got {f.order}")
    if f[N] == 0:
        raise ZeroPivot(f"f_{N} = 0, compositional inverse does not exist")
    g = shifted_normalized(f, N).truncate(T)
    h = comp_inverse(g)
    return CompBernoulliRow(descriptor if descriptor is not None else f, N, h.coeffs)


def comp_bernoulli_polynomials(f: EgfSeries, N: int, n: int) -> QPolynomial:
    """Sum over compositions ``a`` of ``n`` of ``multinomial(n; a)/k! f_k prod C_{N,a_i} x**k``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    C = comp_bernoulli_numbers(f, N, n).values
    coeffs = [Fraction(0)] * (n + 1)
    for a in compositions(n):
        k = len(a)
        term = Fraction(multinomial(n, a), factorial(k)) * f[k]
        for part in a:
            term *= C[part]
        coeffs[k] += term
    return QPolynomial(tuple(coeffs))


def _poly_series_power_sum(outer: list, inner: PolySeries, T: int) -> PolySeries:
    """``sum_k outer[k] * inner**k / k!`` for an inner series with zero constant term."""
    acc = PolySeries((QPolynomial(),) * (T + 1))
    power = PolySeries((QPolynomial.constant(1),) + (QPolynomial(),) * T)
    for k in range(T + 1):
        if not outer[k].is_zero():
            acc = acc + PolySeries(tuple(p * outer[k] for p in power.coeffs)) * Fraction(1, factorial(k))
        power = power * inner
    return acc


def second_gen_genfun(f: EgfSeries, N: int, T: int) -> PolySeries:
    """``f(x * h(y))`` with ``h = sum C_{N,n}^f y^n/n!``, expanded as ``sum_k f_k x^k h^k / k!``."""
    h = comp_bernoulli_numbers(f, N, T).as_series()
    outer = [QPolynomial.monomial(k, f[k]) for k in range(T + 1)]
    return _poly_series_power_sum(outer, PolySeries.from_egf(h), T)


def first_generalization(f: EgfSeries, N: int, T: int) -> PolySeries:
    """``h(f(xy))`` with ``h = sum C_{N,n}^f y^n/n!``; ``f`` must vanish at zero."""
    if f[0] != 0:
        raise NonzeroConstant("first generalization composes into f(xy), which needs f_0 = 0")
    C = comp_bernoulli_numbers(f, N, T).values
    outer = [QPolynomial.constant(c) for c in C]
    return _poly_series_power_sum(outer, PolySeries.scaled_argument(f.truncate(T)), T)


def first_generalization_formula(f: EgfSeries, N: int, n: int) -> QPolynomial:
    """Closed composition sum for the ``y^n/n!`` coefficient of :func:`first_generalization`."""
    if f[0] != 0:
        raise NonzeroConstant("first generalization needs f_0 = 0")
    C = comp_bernoulli_numbers(f, N, n).values
    total = Fraction(0)
    for a in compositions(n):
        k = len(a)
        term = Fraction(multinomial(n, a), factorial(k)) * C[k]
        for part in a:
            term *= f[part]
        total += term
    return QPolynomial.monomial(n, total)

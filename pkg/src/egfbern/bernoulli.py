"""Generalized Bernoulli numbers and polynomials attached to a series ``f``.

``B_{N,n}^f`` are the EGF coefficients of ``(x**N / N!) / (f - pi_N f)``.
With ``f = exp`` and ``N = 1`` these are the classical Bernoulli numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Union

from .catalog import SeriesName, builtin_series
from .errors import OrderTooSmall, PivotNotOne, ZeroPivot
from .qseries import (
    EgfSeries,
    PolySeries,
    QPolynomial,
    divided_shift,
    pi_N,
    reciprocal,
)


@dataclass(frozen=True)
class BernoulliRow:
    f_descriptor: Union[SeriesName, EgfSeries, str]
    N: int
    values: tuple

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def as_series(self) -> EgfSeries:
        return EgfSeries(self.values)


def _check(f: EgfSeries, N: int, T: int) -> None:
    if N < 0 or T < 0:
        raise ValueError("N and T must be non-negative")
    if f.order < N + T:
        raise OrderTooSmall(f"need series order >= N + T = {N + T}, got {f.order}")
    if f[N] == 0:
        raise ZeroPivot(f"f_{N} = 0, Bernoulli numbers undefined")


def bernoulli_numbers(f: EgfSeries, N: int, T: int, descriptor=None) -> BernoulliRow:
    _check(f, N, T)
    inv = reciprocal(divided_shift(f, N))
    return BernoulliRow(descriptor if descriptor is not None else f, N, inv.coeffs[: T + 1])


def bernoulli_via_recursion(f: EgfSeries, N: int, T: int, descriptor=None,
                            as_printed: bool = False) -> BernoulliRow:
    """Triangular recursion from the defining convolution identity.

    Needs ``f_N = 1``.  The minus sign is required: ``as_printed=True`` drops
    it, and then ``B_1`` for ``exp`` comes out as +1/2.
    """
    _check(f, N, T)
    if f[N] != 1:
        raise PivotNotOne(f"recursion assumes f_{N} = 1, got {f[N]}")
    B = [Fraction(1)]
    for n in range(1, T + 1):
        acc = sum((comb(N + n, k) * f[N + n - k] * B[k] for k in range(n)), Fraction(0))
        B.append((acc if as_printed else -acc) / comb(N + n, n))
    return BernoulliRow(descriptor if descriptor is not None else f, N, tuple(B))


def bernoulli_polynomials(f: EgfSeries, N: int, n: int) -> QPolynomial:
    """``B_{N,n}^f(x) = sum_k C(n,k) B_{N,n-k}^f f_k x**k``."""
    B = bernoulli_numbers(f, N, n).values
    return QPolynomial(tuple(comb(n, k) * B[n - k] * f[k] for k in range(n + 1)))


def bernoulli_poly_genfun(f: EgfSeries, N: int, T: int) -> PolySeries:
    return PolySeries(tuple(bernoulli_polynomials(f, N, n) for n in range(T + 1)))


def bernoulli_poly_genfun_residual(f: EgfSeries, N: int, T: int) -> PolySeries:
    """``[sum B_{N,n}^f(x) y^n/n!] (f(y) - pi_N f(y)) - f(xy) y^N/N!``; zero when consistent."""
    if N < 1:
        raise ValueError("N must be >= 1")
    _check(f, N, T)
    lhs = bernoulli_poly_genfun(f, N, T) * PolySeries.from_egf((f - pi_N(f, N)).truncate(T))
    rhs = PolySeries.scaled_argument(f.truncate(T)) * PolySeries.from_egf(EgfSeries.monomial(N, T))
    return lhs - rhs


# -- operators on Q[x] -------------------------------------------------------


def poly_derivative(p: QPolynomial) -> QPolynomial:
    return QPolynomial(tuple(k * c for k, c in enumerate(p.coeffs))[1:])


def poly_antiderivative(p: QPolynomial) -> QPolynomial:
    """Antiderivative with zero constant term."""
    return QPolynomial((0,) + tuple(c / (k + 1) for k, c in enumerate(p.coeffs)))


def apply_series_of_D(f: EgfSeries, p: QPolynomial) -> QPolynomial:
    """``f(D) p = sum_n f_n D^n p / n!`` (a finite sum on polynomials)."""
    if f.order < p.degree:
        raise OrderTooSmall(f"series order {f.order} < polynomial degree {p.degree}")
    out = QPolynomial()
    dp = p
    for n in range(p.degree + 1):
        if f[n]:
            out = out + dp * (f[n] / factorial(n))
        dp = poly_derivative(dp)
    return out


def right_inverse_apply(f: EgfSeries, N: int, p: QPolynomial) -> QPolynomial:
    """Apply ``G = N! sum_n B_{N,n}^f D^n I^N / n!``, a right inverse of ``f(D) - pi_N(f)(D)``."""
    q = p
    for _ in range(N):
        q = poly_antiderivative(q)
    top = max(q.degree, 0)
    B = bernoulli_numbers(f, N, top).values
    out = QPolynomial()
    dq = q
    for n in range(top + 1):
        if B[n]:
            out = out + dq * (B[n] / factorial(n))
        dq = poly_derivative(dq)
    return out * factorial(N)


def operator_O(f: EgfSeries, N: int, p: QPolynomial) -> QPolynomial:
    """``(f(D) - pi_N(f)(D)) p``."""
    return apply_series_of_D(f - pi_N(f, N), p)


def sin_cos_identity_check(n: int):
    """Return ``(B_{1,2n}^sin, (-1)^(n-1) (2^(2n) - 2) B_{2n})``.

    Also asserts the odd-index entry ``B_{1,2n+1}^sin`` vanishes.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    T = 2 * n + 1
    bs = bernoulli_numbers(builtin_series("sin", T + 1), 1, T).values
    b = bernoulli_numbers(builtin_series("exp", T + 1), 1, T).values
    if bs[2 * n + 1] != 0:
        raise AssertionError(f"B_(1,{2 * n + 1})^sin = {bs[2 * n + 1]} is not zero")
    return bs[2 * n], (-1) ** (n - 1) * (2 ** (2 * n) - 2) * b[2 * n]

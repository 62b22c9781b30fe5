"""Exact truncated exponential generating functions over the rationals.

An :class:`EgfSeries` of order ``T`` stores ``c_0 .. c_T`` and stands for
``sum c_n x**n / n! + O(x**(T+1))``.  Coefficients beyond ``T`` are unknown,
not zero, so binary operations return the smaller of the two orders.

    >>> exp = EgfSeries.from_function(lambda n: 1, 4)
    >>> (exp * exp).coeffs
    (Fraction(1, 1), Fraction(2, 1), Fraction(4, 1), Fraction(8, 1), Fraction(16, 1))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Sequence, Union

from .errors import (
    NonzeroConstantInner,
    NotInvertible,
    OrderTooSmall,
    ParseError,
    ZeroConstantTerm,
)

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: they would smuggle rounding into exact data.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"not a rational: {text!r}") from None
    if q == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def render_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return factorial(n)


@dataclass(frozen=True)
class EgfSeries:
    coeffs: tuple

    def __post_init__(self):
        cs = tuple(as_rational(c) for c in self.coeffs)
        if not cs:
            raise ValueError("an EgfSeries needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_function(cls, fn: Callable[[int], Scalar], order: int) -> "EgfSeries":
        return cls(tuple(fn(n) for n in range(order + 1)))

    @classmethod
    def from_ordinary(cls, coeffs: Sequence[Scalar]) -> "EgfSeries":
        """Build from ordinary (Taylor) coefficients ``a_n`` with ``c_n = n! a_n``."""
        return cls(tuple(as_rational(a) * _fact(n) for n, a in enumerate(coeffs)))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "EgfSeries":
        return cls((value,) + (0,) * order)

    @classmethod
    def zero(cls, order: int) -> "EgfSeries":
        return cls.constant(0, order)

    @classmethod
    def x(cls, order: int) -> "EgfSeries":
        """The identity series ``x`` (order must be at least 1)."""
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, k: int, order: int) -> "EgfSeries":
        """``x**k / k!``, i.e. the series with ``c_k = 1`` and nothing else."""
        return cls(tuple(1 if n == k else 0 for n in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def ordinary(self) -> list:
        return [c / _fact(n) for n, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> "EgfSeries":
        if order > self.order:
            raise OrderTooSmall(f"cannot raise order {self.order} to {order}")
        return EgfSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return series_add(self, other)

    def __neg__(self):
        return EgfSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return series_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return EgfSeries(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        body = ", ".join(render_rational(c) for c in self.coeffs)
        return f"EgfSeries([{body}])"


def series_add(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    T = min(f.order, g.order)
    return EgfSeries(tuple(f[n] + g[n] for n in range(T + 1)))


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Binomial convolution ``c_n = sum_k C(n,k) f_k g_{n-k}``."""
    T = min(f.order, g.order)
    out = []
    for n in range(T + 1):
        out.append(sum((comb(n, k) * f[k] * g[n - k] for k in range(n + 1)), Fraction(0)))
    return EgfSeries(tuple(out))


def series_scale_arg(f: EgfSeries, lam: Scalar) -> EgfSeries:
    """Return ``f(lam * x)``."""
    lam = as_rational(lam)
    return EgfSeries(tuple(c * lam**n for n, c in enumerate(f.coeffs)))


def pi_N(f: EgfSeries, N: int) -> EgfSeries:
    """Keep ``c_n`` for ``n < N`` and zero the rest (order unchanged)."""
    if N < 0:
        raise ValueError("projection index must be non-negative")
    return EgfSeries(tuple(c if n < N else 0 for n, c in enumerate(f.coeffs)))


def reciprocal(f: EgfSeries) -> EgfSeries:
    f0 = f[0]
    if f0 == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    inv0 = 1 / f0
    b = [inv0]
    for n in range(1, f.order + 1):
        acc = sum((comb(n, k) * f[n - k] * b[k] for k in range(n)), Fraction(0))
        b.append(-inv0 * acc)
    return EgfSeries(tuple(b))


def _ordinary_compose(a: list, h: list, T: int) -> list:
    # Horner in ordinary coefficients; h[0] == 0 so every product stays truncated at T.
    out = [Fraction(0)] * (T + 1)
    for coeff in reversed(a[: T + 1]):
        prod = [Fraction(0)] * (T + 1)
        for i, oi in enumerate(out):
            if oi == 0:
                continue
            for j in range(1, T + 1 - i):
                if h[j]:
                    prod[i + j] += oi * h[j]
        prod[0] += coeff
        out = prod
    return out


def compose(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Return ``f(g(x))``; the inner series must vanish at zero."""
    if g[0] != 0:
        raise NonzeroConstantInner("inner series of a composition must have g_0 = 0")
    T = min(f.order, g.order)
    out = _ordinary_compose(f.ordinary(), g.ordinary(), T)
    return EgfSeries.from_ordinary(out)


def comp_inverse(g: EgfSeries) -> EgfSeries:
    """Compositional inverse by solving ``[x^n] g(h(x)) = 0`` one order at a time."""
    if g[0] != 0 or g.order < 1 or g[1] == 0:
        raise NotInvertible("compositional inverse needs g_0 = 0 and g_1 != 0")
    T = g.order
    a = g.ordinary()
    h = [Fraction(0)] * (T + 1)
    h[1] = 1 / a[1]
    for n in range(2, T + 1):
        # With h_n still zero, g(h) at order n misses exactly a_1 * h_n.
        partial = _ordinary_compose(a[: n + 1], h[: n + 1], n)
        h[n] = -partial[n] / a[1]
    return EgfSeries.from_ordinary(h)


def divided_shift(f: EgfSeries, N: int) -> EgfSeries:
    """``N! (f - pi_N f) / x**N``; the order drops by ``N``."""
    if N < 0:
        raise ValueError("shift must be non-negative")
    if f.order < N:
        raise OrderTooSmall(f"need order >= {N}, got {f.order}")
    nf = _fact(N)
    return EgfSeries(tuple(
        Fraction(nf * _fact(n), _fact(n + N)) * f[n + N] for n in range(f.order - N + 1)
    ))


def shifted_normalized(f: EgfSeries, N: int) -> EgfSeries:
    """``N! x**(1-N) (f - pi_N f)``: zero constant term, ``c_1 = f_N``."""
    if N < 1:
        raise ValueError("shifted_normalized needs N >= 1")
    if f.order < N:
        raise OrderTooSmall(f"need order >= {N}, got {f.order}")
    nf = _fact(N)
    cs = [Fraction(0)]
    for n in range(1, f.order - N + 2):
        cs.append(Fraction(nf * _fact(n), _fact(N + n - 1)) * f[N + n - 1])
    return EgfSeries(tuple(cs))


def pochhammer(x: Scalar, n: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+n-1)``."""
    return pochhammer_k(x, n, 1)


def pochhammer_k(x: Scalar, n: int, k: Scalar) -> Fraction:
    """Pochhammer k-symbol ``x (x+k) ... (x+(n-1)k)``."""
    x = as_rational(x)
    k = as_rational(k)
    out = Fraction(1)
    for i in range(n):
        out *= x + i * k
    return out


# -- polynomials -------------------------------------------------------------


def _strip(cs: Iterable) -> tuple:
    cs = [as_rational(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class QPolynomial:
    """Dense polynomial ``sum a_k x**k``; the zero polynomial has no coefficients."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "QPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c: Scalar) -> "QPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(tuple(out))

    __rmul__ = __mul__

    def __str__(self):
        return render_polynomial(self)

    def __repr__(self):
        return f"QPolynomial({render_polynomial(self)!r})"


X = QPolynomial((0, 1))


def render_polynomial(p: QPolynomial) -> str:
    """Descending powers, ``p/q*x^k`` terms, e.g. ``x^3 - 3*x^2 + 2*x``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = render_rational(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{render_rational(mag)}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def falling_factorial_poly(n: int) -> QPolynomial:
    """``x (x-1) ... (x-n+1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = QPolynomial.constant(1)
    for i in range(n):
        p = p * QPolynomial((-i, 1))
    return p


# -- series with polynomial coefficients ---------------------------------------


@dataclass(frozen=True)
class PolySeries:
    """``sum P_n(x) y**n / n! + O(y**(T+1))`` with ``P_n`` in ``Q[x]``."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(c if isinstance(c, QPolynomial) else QPolynomial.constant(c) for c in self.coeffs)
        if not cs:
            raise ValueError("a PolySeries needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_egf(cls, f: EgfSeries) -> "PolySeries":
        """Constant-in-``x`` lift of an ordinary EGF in ``y``."""
        return cls(tuple(QPolynomial.constant(c) for c in f.coeffs))

    @classmethod
    def scaled_argument(cls, f: EgfSeries) -> "PolySeries":
        """``f(x*y)`` viewed as a series in ``y``: ``P_n = f_n x**n``."""
        return cls(tuple(QPolynomial.monomial(n, c) for n, c in enumerate(f.coeffs)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.coeffs)

    def truncate(self, order: int) -> "PolySeries":
        if order > self.order:
            raise OrderTooSmall(f"cannot raise order {self.order} to {order}")
        return PolySeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        T = min(self.order, other.order)
        return PolySeries(tuple(self[n] + other[n] for n in range(T + 1)))

    def __neg__(self):
        return PolySeries(tuple(-p for p in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolySeries(tuple(p * other for p in self.coeffs))
        if not isinstance(other, PolySeries):
            return NotImplemented
        T = min(self.order, other.order)
        out = []
        for n in range(T + 1):
            acc = QPolynomial()
            for k in range(n + 1):
                acc = acc + self[k] * other[n - k] * comb(n, k)
            out.append(acc)
        return PolySeries(tuple(out))

    __rmul__ = __mul__

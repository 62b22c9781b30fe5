"""Named generating series and rational-parameter Gauss hypergeometric series."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .errors import ParseError, PochhammerZeroDenominator
from .qseries import EgfSeries, pochhammer, series_scale_arg

_PARAM_TAGS = {"ek": "ek", "zeta": "zetaM", "zrising": "zetaRisingM"}
_PLAIN_TAGS = {"exp": "exp", "sin": "sin", "cos": "cos", "sfac2": "sFactorialSq"}
_SPELLING = {v: k for k, v in {**_PARAM_TAGS, **_PLAIN_TAGS}.items()}


@dataclass(frozen=True)
class SeriesName:
    tag: str
    parameter: Optional[int] = None

    def __post_init__(self):
        needs = self.tag in _PARAM_TAGS.values()
        if self.tag not in _SPELLING:
            raise ParseError(f"unknown series tag {self.tag!r}")
        if needs != (self.parameter is not None):
            raise ParseError(f"series {self.tag!r} parameter mismatch")
        if needs and self.parameter < 1:
            raise ParseError(f"series {self.tag!r} needs a parameter >= 1")

    @classmethod
    def parse(cls, text: str) -> "SeriesName":
        """Parse the textual spelling: ``exp``, ``ek:K``, ``zeta:M``, ``zrising:M``, ..."""
        s = text.strip()
        if s in _PLAIN_TAGS:
            return cls(_PLAIN_TAGS[s])
        head, sep, arg = s.partition(":")
        if sep and head in _PARAM_TAGS and arg.isdigit():
            return cls(_PARAM_TAGS[head], int(arg))
        raise ParseError(f"unknown series name {text!r}")

    def __str__(self):
        spelled = _SPELLING[self.tag]
        return spelled if self.parameter is None else f"{spelled}:{self.parameter}"


def _coefficient(name: SeriesName, n: int) -> Fraction:
    tag, p = name.tag, name.parameter
    if tag == "exp":
        return Fraction(1)
    if tag == "sin":
        return Fraction(0) if n % 2 == 0 else Fraction((-1) ** (n // 2))
    if tag == "cos":
        return Fraction(0) if n % 2 else Fraction((-1) ** (n // 2))
    if tag == "ek":
        return Fraction(1, factorial(n) ** (p - 1))
    if tag == "zetaM":
        return Fraction(0) if n == 0 else Fraction(1, n**p)
    if tag == "zetaRisingM":
        return Fraction(0) if n == 0 else 1 / pochhammer(n, p)
    # sFactorialSq
    return Fraction(1, factorial(n))


def builtin_series(name, T: int) -> EgfSeries:
    if isinstance(name, str):
        name = SeriesName.parse(name)
    if T < 0:
        raise ValueError("order must be non-negative")
    return EgfSeries.from_function(lambda n: _coefficient(name, n), T)


CATALOG = tuple(SeriesName.parse(s) for s in (
    "exp", "sin", "cos", "ek:2", "ek:3", "zeta:1", "zeta:2", "zeta:3",
    "zrising:1", "zrising:2", "zrising:3", "sfac2",
))


@dataclass(frozen=True)
class SignedRatio:
    """``sign * a / b`` with positive naturals ``a`` and ``b``."""

    sign: int
    a: int
    b: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ParseError("sign must be +1 or -1")
        if self.a < 1 or self.b < 1:
            raise ParseError("numerator and denominator must be positive naturals")

    _RE = re.compile(r"^\s*([+-]?)(\d+)(?:/(\d+))?\s*$")

    @classmethod
    def parse(cls, text: str) -> "SignedRatio":
        m = cls._RE.match(text)
        if not m:
            raise ParseError(f"not a signed ratio: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        return cls(sign, int(m.group(2)), int(m.group(3) or 1))

    @property
    def value(self) -> Fraction:
        return Fraction(self.sign * self.a, self.b)

    def __str__(self):
        return f"{'-' if self.sign < 0 else ''}{self.a}/{self.b}"


def hypergeom_coefficient(r1: SignedRatio, r2: SignedRatio, r3: SignedRatio, n: int) -> Fraction:
    den = pochhammer(r3.value, n)
    if den == 0:
        raise PochhammerZeroDenominator(n)
    return pochhammer(r1.value, n) * pochhammer(r2.value, n) / den


def hypergeom_series(r1: SignedRatio, r2: SignedRatio, r3: SignedRatio, T: int) -> EgfSeries:
    """EGF with ``c_n = (r1)_n (r2)_n / (r3)_n``."""
    return EgfSeries(tuple(hypergeom_coefficient(r1, r2, r3, n) for n in range(T + 1)))


def ek_species_series(k: int, T: int) -> EgfSeries:
    """``e_k(2**(k-1) x)``, whose coefficients are ``2**((k-1)n) / (n!)**(k-1)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return series_scale_arg(builtin_series(SeriesName("ek", k), T), 2 ** (k - 1))

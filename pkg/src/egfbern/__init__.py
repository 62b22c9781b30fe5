"""Exact generalized and compositional Bernoulli numbers over truncated EGFs."""

__version__ = "0.1.0"

from .bernoulli import bernoulli_numbers, bernoulli_polynomials
from .catalog import SeriesName, builtin_series
from .compositional import comp_bernoulli_numbers, comp_bernoulli_polynomials
from .qseries import EgfSeries, QPolynomial, compose, comp_inverse, reciprocal

__all__ = [
    "EgfSeries", "QPolynomial", "SeriesName", "builtin_series", "bernoulli_numbers",
    "bernoulli_polynomials", "comp_bernoulli_numbers", "comp_bernoulli_polynomials",
    "compose", "comp_inverse", "reciprocal",
]

"""Composition, partition and chain sums that recompute series coefficients.

Series arguments are only indexed (``f[k]``); no series algebra is used.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from ..errors import NonzeroConstant, ZeroPivot
from .enumerate import compositions, multinomial, partition_chains, set_partitions


def _normalized_comp_sum(coef, N: int, n: int) -> Fraction:
    # (f_N + u)^{-1} = (1/f_N) sum_k (-u/f_N)^k, one composition per k-fold product.
    pivot = Fraction(coef(N))
    if pivot == 0:
        raise ZeroPivot(f"f_{N} = 0")
    if n == 0:
        return 1 / pivot
    nf = factorial(N)
    total = Fraction(0)
    for a in compositions(n):
        term = Fraction((-nf) ** len(a)) / pivot ** len(a)
        for part in a:
            term *= Fraction(coef(part + N), factorial(part + N))
        total += term
    return factorial(n) * total / pivot


def comp_sum_bernoulli(f, N: int, n: int) -> Fraction:
    """``n! sum_{a |= n} (-N!)^k prod f_{a_i+N}/(a_i+N)!``, rescaled when ``f_N != 1``."""
    return _normalized_comp_sum(lambda m: f[m], N, n)


def comp_sum_zeta(N: int, M: int, n: int) -> Fraction:
    """The composition sum for ``f_m = 1/m**M`` with a per-term sign ``(-N!)**k``."""
    if N < 1 or M < 1:
        raise ValueError("N and M must be >= 1")
    return _normalized_comp_sum(lambda m: Fraction(1, m**M), N, n)


def comp_sum_zeta_as_printed(N: int, M: int, n: int) -> Fraction:
    """Variant with one global ``(-1)**n`` and unsigned ``N!**k`` per term."""
    total = Fraction(0)
    for a in compositions(n):
        term = Fraction(factorial(N) ** len(a))
        for part in a:
            term /= factorial(part + N) * (part + N) ** M
        total += term
    return (-1) ** n * factorial(n) * total


def parity_sum_trig(kind: str, L: int, n: int, as_printed: bool = False) -> Fraction:
    """Even-part composition sum for ``B_{N,2n}`` of sine (``N=2L+1``) or cosine (``N=2L``).

    Each term carries ``(-1)**(n+L+k)``.  ``as_printed=True`` uses the weight
    ``(-1)**(n + k(L+1))`` instead, which only agrees when ``L = 0`` or ``n = 1``.
    """
    if kind == "sin":
        N = 2 * L + 1
    elif kind == "cos":
        if L < 1:
            raise ValueError("cosine needs L >= 1")
        N = 2 * L
    else:
        raise ValueError(f"kind must be 'sin' or 'cos', got {kind!r}")
    if n < 1 or L < 0:
        raise ValueError("n must be >= 1 and L >= 0")
    nf = factorial(N)
    total = Fraction(0)
    for a in compositions(2 * n, even_only=True):
        k = len(a)
        sign = (-1) ** (n + k * (L + 1)) if as_printed else (-1) ** (n + L + k)
        total += Fraction(sign * nf**k, prod(factorial(part + N) for part in a))
    return factorial(2 * n) * total


def faa_di_bruno(f, g, n: int) -> Fraction:
    """``sum over set partitions pi of [n]`` of ``f_{|pi|} prod_b g_{|b|}``."""
    if n == 0:
        return Fraction(f[0])
    total = Fraction(0)
    for part in set_partitions(n):
        term = Fraction(f[len(part)])
        for b in part:
            term *= g[len(b)]
        total += term
    return total


def _chain_weight(chain, weight) -> Fraction:
    w = Fraction(weight(len(chain.top)))
    for sizes in chain.block_sizes():
        for size in sizes:
            w *= weight(size)
    return w


def iterated_compose_oracle(f, d: int, n: int, allow_trivial_top: bool = False) -> Fraction:
    """Chain sum over towers of depth ``d`` of ``f_{|pi_d|} prod_{i,b} f_{|b|}``.

    With ``allow_trivial_top`` this is the ``x^n/n!`` coefficient of ``f``
    composed with itself ``d+1`` times.
    """
    if f[0] != 0:
        raise NonzeroConstant("iterated composition needs f_0 = 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    chains = partition_chains(n, d, 1, require_top_ge2=not allow_trivial_top)
    return sum((_chain_weight(c, lambda m: f[m]) for c in chains), Fraction(0))


def _chains_min2(n: int):
    d = 1
    while True:
        chains = partition_chains(n, d, 2, require_top_ge2=True)
        if not chains:
            return
        yield d, chains
        d += 1


def inverse_chain_sum(f, n: int) -> Fraction:
    """Alternating chain sum ``-f_n + sum_{d>=1} (-1)^(d+1) sum_{Par_d^2} f_{|pi_d|} prod f_{|b|}``.

    Meant for ``x + f`` with ``f_0 = f_1 = 0``; it does *not* reproduce the
    compositional inverse beyond order 2.
    """
    if f[0] != 0 or f[1] != 0:
        raise NonzeroConstant("inverse_chain_sum needs f_0 = f_1 = 0")
    if n == 1:
        return Fraction(1)
    total = Fraction(-f[n])
    for d, chains in _chains_min2(n):
        total += (-1) ** (d + 1) * sum((_chain_weight(c, lambda m: f[m]) for c in chains), Fraction(0))
    return total


def chain_sum_comp_bernoulli(f, N: int, n: int) -> Fraction:
    """Chain-sum expression for ``C_{N,n}^f`` with ``u(m) = f_{m+N-1} m!/(m+N-1)!``.

    Value: ``-N! u(n) + sum_{d>=1} sum_{Par_d^2([n])} (-N!)^(d+1) u(|pi_d|) prod u(|b|)``.
    For ``f = exp, N = 2`` it matches ``C_{2,2}`` but not ``C_{2,3}`` or ``C_{2,4}``.
    """
    if n < 2:
        raise ValueError("chain sum is defined for n >= 2")
    if f[N] == 0:
        raise ZeroPivot(f"f_{N} = 0")
    nf = factorial(N)

    def u(m):
        return Fraction(f[m + N - 1] * factorial(m), factorial(m + N - 1))

    total = -nf * u(n)
    for d, chains in _chains_min2(n):
        total += (-nf) ** (d + 1) * sum((_chain_weight(c, u) for c in chains), Fraction(0))
    return total


def _ordinary_mul(a: list, b: list, T: int) -> list:
    out = [Fraction(0)] * (T + 1)
    for i, x in enumerate(a[: T + 1]):
        if x:
            for j, y in enumerate(b[: T + 1 - i]):
                out[i + j] += x * y
    return out


def lagrange_inverse_coefficient(g, n: int) -> Fraction:
    """``x^n/n!`` coefficient of the compositional inverse of ``g`` by Lagrange inversion.

    ``[x^n] h = (1/n) [w^(n-1)] (w/g(w))^n``, computed on plain coefficient
    lists.  Needs ``g_0 = 0``, ``g_1 != 0`` and ``g`` known up to order ``n``.
    """
    if g[0] != 0 or g[1] == 0:
        raise NonzeroConstant("Lagrange inversion needs g_0 = 0 and g_1 != 0")
    if n < 1:
        return Fraction(0)
    # w/g(w) = 1 / (g_1 + g_2 w/2! + ...), as ordinary coefficients up to w^(n-1)
    q = [Fraction(g[m + 1], factorial(m + 1)) for m in range(n)]
    inv = [1 / q[0]]
    for m in range(1, n):
        inv.append(-sum((q[j] * inv[m - j] for j in range(1, m + 1)), Fraction(0)) / q[0])
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for _ in range(n):
        power = _ordinary_mul(power, inv, n - 1)
    return power[n - 1] / n * factorial(n)


def _chain_formula(n: int, d: int, s: int, require_top_ge2: bool, as_printed: bool) -> Fraction:
    # Nested compositions a_1 |= n, a_i |= l(a_{i-1}); each level counts
    # multinomial / l(a_i)! set partitions with that ordered block profile.
    def walk(m: int, depth: int) -> Fraction:
        total = Fraction(0)
        for a in compositions(m, s):
            w = Fraction(multinomial(m, a))
            last = depth == d
            if not as_printed or last:
                w /= factorial(len(a))
            if last:
                if require_top_ge2 and len(a) < 2:
                    continue
                total += w
            else:
                total += w * walk(len(a), depth + 1)
        return total

    return walk(n, 1)


def chains_count_check(n: int, d: int, s: int, require_top_ge2: bool = True, as_printed: bool = False):
    """``(enumerated |Par_d^s([n])|, nested-multinomial count)``.

    ``as_printed=True`` keeps only the top-level ``1/l(a_d)!`` factor, which
    overcounts as soon as ``d >= 2``.
    """
    enumerated = len(partition_chains(n, d, s, require_top_ge2))
    formula = _chain_formula(n, d, s, require_top_ge2, as_printed)
    return enumerated, int(formula) if formula.denominator == 1 else formula

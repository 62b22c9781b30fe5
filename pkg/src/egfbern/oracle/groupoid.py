"""Cardinalities of finite Z/2-graded groupoids.

A :class:`GroupoidCard` keeps only what the valuation sees: for each
isomorphism class its automorphism-group order and its parity, merged into
a multiset.  :func:`action_groupoid_card` is the exception; it builds an
action groupoid from explicit objects and permutations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from ..catalog import SignedRatio
from ..errors import PochhammerZeroDenominator, SizeExplosion

MAX_CLASSES = 10**6


@dataclass(frozen=True)
class GroupoidCard:
    """Multiset of ``(aut, parity) -> multiplicity``, stored as a sorted tuple."""

    classes: tuple = ()

    def __post_init__(self):
        merged = Counter()
        for aut, parity, mult in self.classes:
            if aut < 1 or mult < 0 or parity not in (0, 1):
                raise ValueError(f"bad class ({aut}, {parity}, {mult})")
            if mult:
                merged[(aut, parity)] += mult
        if len(merged) > MAX_CLASSES:
            raise SizeExplosion(f"{len(merged)} distinct classes exceed {MAX_CLASSES}")
        object.__setattr__(
            self, "classes", tuple(sorted((a, p, m) for (a, p), m in merged.items()))
        )

    @property
    def class_count(self) -> int:
        return sum(m for _, _, m in self.classes)

    def __or__(self, other):
        return groupoid_combine(self, other, "union")

    def __mul__(self, other):
        return groupoid_combine(self, other, "product")

    def __neg__(self):
        return groupoid_negate(self)


def groupoid_cardinality(G: GroupoidCard) -> Fraction:
    return sum((Fraction((-1) ** p * m, a) for a, p, m in G.classes), Fraction(0))


def groupoid_combine(G: GroupoidCard, H: GroupoidCard, mode: str) -> GroupoidCard:
    if mode == "union":
        return GroupoidCard(G.classes + H.classes)
    if mode == "product":
        if len(G.classes) * len(H.classes) > MAX_CLASSES:
            raise SizeExplosion("product would exceed the class bound")
        return GroupoidCard(tuple(
            (a * b, (p + q) % 2, m * n) for a, p, m in G.classes for b, q, n in H.classes
        ))
    raise ValueError(f"mode must be 'union' or 'product', got {mode!r}")


def groupoid_negate(G: GroupoidCard) -> GroupoidCard:
    return GroupoidCard(tuple((a, 1 - p, m) for a, p, m in G.classes))


UNIT = GroupoidCard(((1, 0, 1),))
EMPTY = GroupoidCard()


def discrete(m: int) -> GroupoidCard:
    """A set of ``m`` points seen as a groupoid with only identities."""
    if m < 0:
        raise ValueError("a set has non-negative size")
    return GroupoidCard(((1, 0, m),))


def cyclic(m: int) -> GroupoidCard:
    """One object with automorphism group Z_|m|; negative ``m`` flips the parity."""
    if m == 0:
        raise ValueError("Z_0 is not a finite group")
    return GroupoidCard(((abs(m), 0 if m > 0 else 1, 1),))


def power(G: GroupoidCard, m: int) -> GroupoidCard:
    out = UNIT
    for _ in range(m):
        out = out * G
    return out


def pochhammer_groupoid(G: GroupoidCard, n: int, K: GroupoidCard) -> GroupoidCard:
    """``prod_{i<n} (G + K x [i])``, of cardinality ``(|G|)_{n,|K|}``."""
    out = UNIT
    for i in range(n):
        out = out * (G | (K * discrete(i)))
    return out


def cyclic_chain(m: int, n: int, l: int) -> GroupoidCard:
    """``prod_{i<n} Zbar_{m+il}``, of cardinality ``1/(m)_{n,l}``."""
    out = UNIT
    for i in range(n):
        if m + i * l == 0:
            raise PochhammerZeroDenominator(i + 1, f"factor Z_{m + i * l} at i={i} is undefined")
        out = out * cyclic(m + i * l)
    return out


def _signed_set(r: SignedRatio) -> GroupoidCard:
    g = discrete(r.a)
    return g if r.sign > 0 else -g


def hyper_groupoid(r1: SignedRatio, r2: SignedRatio, r3: SignedRatio, n: int) -> GroupoidCard:
    """The product groupoid whose cardinality is the ``n``-th hypergeometric coefficient."""
    out = pochhammer_groupoid(_signed_set(r1), n, discrete(r1.b))
    out = out * pochhammer_groupoid(_signed_set(r2), n, discrete(r2.b))
    out = out * power(cyclic(r1.b), n) * power(cyclic(r2.b), n)
    out = out * cyclic_chain(r3.sign * r3.a, n, r3.b)
    return out * power(discrete(r3.b), n)


def hyper_groupoid_card(r1: SignedRatio, r2: SignedRatio, r3: SignedRatio, n: int) -> Fraction:
    return groupoid_cardinality(hyper_groupoid(r1, r2, r3, n))


# -- explicit action groupoids ----------------------------------------------


def _act_on_mask(perm, mask: int) -> int:
    out = 0
    for i, j in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << j
    return out


def _action_groupoid(objects, group, act) -> GroupoidCard:
    """Orbits with their stabilizer orders, found by applying every group element."""
    seen = set()
    classes = []
    for obj in objects:
        if obj in seen:
            continue
        orbit = set()
        stab = 0
        for g in group:
            img = act(g, obj)
            orbit.add(img)
            if img == obj:
                stab += 1
        if stab * len(orbit) != len(group):
            raise AssertionError("orbit-stabilizer count is inconsistent")
        seen |= orbit
        classes.append((stab, 0, 1))
    if len(seen) != len(objects):
        raise AssertionError("orbits do not cover the object set")
    return GroupoidCard(tuple(classes))


def subsets_groupoid(n: int) -> GroupoidCard:
    if n > 8:
        raise SizeExplosion("subset action groupoid is enumerated only for n <= 8")
    group = list(permutations(range(n)))
    return _action_groupoid(list(range(2**n)), group, _act_on_mask)


def ek_groupoid(n: int, k: int) -> GroupoidCard:
    """Objects: ``(k-1)``-tuples of subsets; morphisms: tuples of permutations."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n > 5 or (factorial(n) ** (k - 1)) * (2 ** ((k - 1) * n)) > 10**8:
        raise SizeExplosion("E_k action groupoid is enumerated only for n <= 5, k <= 3")
    objects = list(product(range(2**n), repeat=k - 1))
    group = list(product(list(permutations(range(n))), repeat=k - 1))

    def act(g, obj):
        return tuple(_act_on_mask(p, m) for p, m in zip(g, obj))

    return _action_groupoid(objects, group, act)


def action_groupoid_card(kind: str, n: int, k: int = 2) -> Fraction:
    """``kind`` is ``"subsets"`` or ``"Ek"``; cardinality by orbit-stabilizer enumeration."""
    if kind == "subsets":
        return groupoid_cardinality(subsets_groupoid(n))
    if kind == "Ek":
        return groupoid_cardinality(ek_groupoid(n, k))
    raise ValueError(f"unknown action groupoid {kind!r}")

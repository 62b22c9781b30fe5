from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from egfbern.catalog import SignedRatio, hypergeom_series
from egfbern.errors import PochhammerZeroDenominator, SizeExplosion
from egfbern.oracle import groupoid as gp
from egfbern.qseries import pochhammer_k

card = gp.groupoid_cardinality

groupoids = st.builds(
    gp.GroupoidCard,
    st.lists(st.tuples(st.integers(1, 12), st.integers(0, 1), st.integers(0, 5)), max_size=5).map(tuple),
)


def test_cardinality_examples():
    assert card(gp.cyclic(3)) == F(1, 3)
    assert card(gp.groupoid_negate(gp.cyclic(2))) == F(-1, 2)
    assert card(gp.cyclic(-2)) == F(-1, 2)
    assert card(gp.discrete(5)) == 5


def test_combine_examples():
    z2, z3 = gp.cyclic(2), gp.cyclic(3)
    assert card(gp.groupoid_combine(z2, z2, "union")) == 1
    assert card(gp.groupoid_combine(z2, z3, "product")) == F(1, 6)
    with pytest.raises(ValueError):
        gp.groupoid_combine(z2, z3, "sum")


def test_constructor_examples():
    assert card(gp.cyclic_chain(2, 2, 3)) == F(1, 10)
    assert card(gp.power(gp.cyclic(2), 3)) == F(1, 8)
    assert card(gp.pochhammer_groupoid(gp.discrete(1), 2, gp.discrete(1))) == 2
    with pytest.raises(PochhammerZeroDenominator):
        gp.cyclic_chain(-2, 3, 1)


@settings(max_examples=100, deadline=None)
@given(groupoids, groupoids)
def test_valuation_laws(G, H):
    assert card(G | H) == card(G) + card(H)
    assert card(G * H) == card(G) * card(H)
    assert card(-G) == -card(G)
    assert card(-G | G) == 0


def test_cyclic_chain_cardinality():
    for m in range(1, 6):
        for n in range(5):
            for l in range(4):
                assert card(gp.cyclic_chain(m, n, l)) == 1 / pochhammer_k(m, n, l)


def test_hyper_examples():
    r = [SignedRatio.parse(s) for s in ("1/2", "1/3", "2/5")]
    assert gp.hyper_groupoid_card(*r, 0) == 1
    assert gp.hyper_groupoid_card(*r, 2) == F(25, 42)
    r[0] = SignedRatio.parse("-1/2")
    assert gp.hyper_groupoid_card(*r, 1) == F(-5, 12)


@pytest.mark.parametrize("triple", [
    ("1/2", "1/3", "2/5"), ("-1/2", "1/3", "2/5"), ("1", "1", "1"), ("-3/2", "5/4", "-7/3"), ("2/3", "-1/6", "3/4"),
])
def test_hyper_matches_series(triple):
    rs = [SignedRatio.parse(s) for s in triple]
    h = hypergeom_series(*rs, 6)
    assert [gp.hyper_groupoid_card(*rs, n) for n in range(7)] == list(h.coeffs)


def test_action_examples():
    assert gp.action_groupoid_card("subsets", 3) == F(4, 3)
    assert gp.action_groupoid_card("Ek", 2, 2) == 2
    assert gp.action_groupoid_card("Ek", 2, 3) == 4


def test_subsets_all_n():
    for n in range(9):
        assert gp.action_groupoid_card("subsets", n) == F(2**n, factorial(n))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ek_all_n(k):
    for n in range(6):
        assert gp.action_groupoid_card("Ek", n, k) == F(2 ** ((k - 1) * n), factorial(n) ** (k - 1))


def test_action_groupoid_is_explicit():
    # 3-element subsets under S_3: four orbits (by size), stabilizers 6, 2, 2, 6
    assert gp.subsets_groupoid(3).classes == ((2, 0, 2), (6, 0, 2))


def test_size_guards():
    with pytest.raises(SizeExplosion):
        gp.subsets_groupoid(9)
    with pytest.raises(SizeExplosion):
        gp.ek_groupoid(6, 2)

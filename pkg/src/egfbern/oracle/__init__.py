"""Brute-force recomputation layer.

Everything here enumerates combinatorial objects explicitly and never
calls the series algebra in :mod:`egfbern.qseries`, so agreement between
the two is evidence rather than tautology.
"""

from .enumerate import (
    PartitionChain,
    compositions,
    multinomial,
    partition_chains,
    set_partitions,
)
from .groupoid import (
    GroupoidCard,
    action_groupoid_card,
    cyclic,
    cyclic_chain,
    discrete,
    groupoid_cardinality,
    groupoid_combine,
    groupoid_negate,
    hyper_groupoid_card,
    pochhammer_groupoid,
    power,
)
from .sums import (
    chain_sum_comp_bernoulli,
    chains_count_check,
    comp_sum_bernoulli,
    comp_sum_zeta,
    faa_di_bruno,
    inverse_chain_sum,
    iterated_compose_oracle,
    lagrange_inverse_coefficient,
    parity_sum_trig,
)

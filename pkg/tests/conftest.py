"""Shared test helpers.

fold_pairwise is an independent oracle used across the suite: it computes
the full multiplicity distribution by iterated two-spin coupling (the
textbook |j1 - j2| .. j1 + j2 ladder), never touching the package's
generating-function, binomial, or composition machinery.
"""

from __future__ import annotations

import random

from spincg import DecompositionTable, SpinMultiset


def fold_pairwise(spins: SpinMultiset) -> dict[int, int]:
    """Multiplicities {twice_J: count} by coupling one spin at a time."""
    dist: dict[int, int] | None = None
    for twice_j in spins.twice_spins:
        if dist is None:
            dist = {twice_j: 1}
            continue
        merged: dict[int, int] = {}
        for twice_a, mult in dist.items():
            low = abs(twice_a - twice_j)
            for twice_c in range(low, twice_a + twice_j + 1, 2):
                merged[twice_c] = merged.get(twice_c, 0) + mult
        dist = merged
    assert dist is not None
    return dist


def table_as_dict(table: DecompositionTable) -> dict[int, int]:
    return dict(table.entries)


def random_multiset(
    rng: random.Random,
    max_total: int = 6,
    max_twice: int = 5,
) -> SpinMultiset:
    """Random spin multiset with at most max_total spins."""
    total = rng.randint(1, max_total)
    entries: dict[int, int] = {}
    remaining = total
    while remaining > 0:
        twice_j = rng.randint(1, max_twice)
        take = rng.randint(1, remaining)
        entries[twice_j] = entries.get(twice_j, 0) + take
        remaining -= take
    return SpinMultiset.from_entries(entries)


def random_multiset_bounded_dim(
    rng: random.Random, max_dimension: int, min_dimension: int = 1
) -> SpinMultiset:
    """Random multiset rejection-sampled into a total_dimension window."""
    max_total = 6 if min_dimension <= 1 else 8
    while True:
        spins = random_multiset(rng, max_total=max_total, max_twice=9)
        if min_dimension <= spins.total_dimension <= max_dimension:
            return spins

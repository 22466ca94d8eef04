"""Brute-force enumeration oracles.

Every fast path in the package is validated against direct state counting.
Nothing in this module touches the formula machinery (no generating
functions, no binomial sums, no partition recurrences): tables are built by
walking product states with a mixed-radix counter, or by enumerating
combinations and subsets, and histogramming sums.  That independence is the
point; an oracle that shared code with the fast path would prove nothing.

Enumeration size is guarded by an EnumerationBudget (default one million
states) and overruns raise BudgetExceededError before any work starts where
the count is known up front.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .decompose import OmegaTable
from .errors import BudgetExceededError
from .qpoly import IntPolynomial
from .spins import SpinMultiset

__all__ = [
    "EnumerationBudget",
    "DEFAULT_MAX_STATES",
    "oracle_omega",
    "oracle_sym",
    "oracle_antisym",
    "oracle_qbinom",
    "oracle_restricted_partitions",
]

DEFAULT_MAX_STATES = 10**6


@dataclass(frozen=True)
class EnumerationBudget:
    """Cap on how many states an oracle may enumerate."""

    max_states: int = DEFAULT_MAX_STATES


def _require(budget: EnumerationBudget, states: int, what: str) -> None:
    if states > budget.max_states:
        raise BudgetExceededError(
            f"{what} needs {states} states, over the budget of {budget.max_states}"
        )


def oracle_omega(
    spins: SpinMultiset, budget: EnumerationBudget = EnumerationBudget()
) -> OmegaTable:
    """Omega table by enumerating every product state.

    Each spin contributes a digit n_i in 0 .. 2j_i; the counter steps
    through all prod (2j_i + 1) tuples odometer-style, maintaining the
    running digit sum, and histograms it.
    """
    caps = spins.twice_spins
    _require(budget, spins.total_dimension, f"oracle_omega({spins})")
    span = sum(caps)
    counts = [0] * (span + 1)
    digits = [0] * len(caps)
    total = 0
    counts[0] = 1
    width = len(caps)
    while True:
        i = 0
        while i < width and digits[i] == caps[i]:
            total -= caps[i]
            digits[i] = 0
            i += 1
        if i == width:
            break
        digits[i] += 1
        total += 1
        counts[total] += 1
    return OmegaTable(tuple(counts), span)


def oracle_sym(
    twice_j: int, count: int, budget: EnumerationBudget = EnumerationBudget()
) -> OmegaTable:
    """Symmetric-composition table by enumerating multisets of levels.

    One state per multiset of N levels from 0 .. 2j (order never matters
    for bosons); the histogram of level sums is the table.
    """
    states = math.comb(twice_j + count, count)
    _require(budget, states, f"oracle_sym(2j={twice_j}, N={count})")
    span = twice_j * count
    counts = [0] * (span + 1)
    for levels in combinations_with_replacement(range(twice_j + 1), count):
        counts[sum(levels)] += 1
    return OmegaTable(tuple(counts), span)


def oracle_antisym(
    twice_j: int, count: int, budget: EnumerationBudget = EnumerationBudget()
) -> OmegaTable:
    """Antisymmetric-composition table by enumerating level subsets.

    One state per set of N distinct levels; with N > 2j + 1 there are no
    subsets and the table is empty (Pauli exclusion).
    """
    if count > twice_j + 1:
        return OmegaTable((), -1)
    states = math.comb(twice_j + 1, count)
    _require(budget, states, f"oracle_antisym(2j={twice_j}, N={count})")
    span = sum(range(twice_j + 1 - count, twice_j + 1))
    counts = [0] * (span + 1)
    for levels in combinations(range(twice_j + 1), count):
        counts[sum(levels)] += 1
    return OmegaTable(tuple(counts), span)


def oracle_qbinom(
    a: int, b: int, budget: EnumerationBudget = EnumerationBudget()
) -> IntPolynomial:
    """Gaussian binomial by subset sums.

    [a choose b]_q = sum over b-subsets S of {1..a} of q^(sum(S) - b(b+1)/2).
    """
    if b < 0 or b > a:
        return IntPolynomial.zero()
    states = math.comb(a, b)
    _require(budget, states, f"oracle_qbinom({a}, {b})")
    shift = b * (b + 1) // 2
    counts = [0] * (b * (a - b) + 1)
    for subset in combinations(range(1, a + 1), b):
        counts[sum(subset) - shift] += 1
    return IntPolynomial(tuple(counts))


def oracle_restricted_partitions(
    n: int, m: int, k: int, budget: EnumerationBudget = EnumerationBudget()
) -> int:
    """p(n, m, k) by listing the partitions themselves.

    Walks nonincreasing part sequences directly; each visited node counts
    against the budget.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    visited = 0

    def walk(remaining: int, cap: int, slots: int) -> int:
        nonlocal visited
        visited += 1
        if visited > budget.max_states:
            raise BudgetExceededError(
                f"oracle_restricted_partitions({n}, {m}, {k}) passed "
                f"{budget.max_states} enumeration steps"
            )
        if remaining == 0:
            return 1
        if slots == 0 or cap == 0:
            return 0
        found = 0
        for value in range(min(cap, remaining), 0, -1):
            found += walk(remaining - value, value, slots - 1)
        return found

    return walk(k, n, m)

"""Small integer helpers used throughout the package."""

from __future__ import annotations

import math


def heaviside(x: int) -> int:
    """Discrete unit step with heaviside(0) == 1.

    Every step function in the package goes through this single definition,
    so the boundary convention cannot drift between formulas.
    """
    return 1 if x >= 0 else 0


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) under the summation conventions used here.

    Returns 0 for k < 0 and for 0 <= n < k.  For k == 0 the value is 1 for
    every n, including negative n; the alternating sums in this package only
    ever reach a negative top argument with k == 0 (for example C(-1, 0) in
    the q -> 1 limit identities), where the empty product is 1.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < k:
        return 0
    return math.comb(n, k)

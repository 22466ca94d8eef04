"""Terminating generalized hypergeometric series at unit argument, exactly.

A pFq with at least one nonpositive-integer upper parameter is a finite sum;
with rational parameters every term is a Fraction, so the value is computed
without any floating point.  The subspace-dimension and multiplicity
formulas for identical spins are such series, as are the Catalan and Riordan
number identities they specialize to.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DomainError

__all__ = ["eval_terminating_pfq", "termination_index"]

Rational = int | Fraction


def termination_index(uppers: Iterable[Rational]) -> int | None:
    """K = min{-a : a a nonpositive integer among uppers}, or None.

    The series terminates after the term of index K, because the Pochhammer
    factor of that parameter vanishes from then on.
    """
    candidates = [
        -int(u) for u in (Fraction(x) for x in uppers)
        if u <= 0 and u.denominator == 1
    ]
    if not candidates:
        return None
    return min(candidates)


def eval_terminating_pfq(
    uppers: Iterable[Rational], lowers: Iterable[Rational]
) -> Fraction:
    """Sum of pFq(uppers; lowers; 1) for a terminating series.

    Terms are accumulated through the ratio t_{k+1} / t_k = prod(a + k) /
    (prod(b + k) (k + 1)), starting from t_0 = 1.  Raises DomainError if no
    upper parameter is a nonpositive integer (the series would not
    terminate) and ZeroDivisionError if a lower parameter hits zero before
    the series terminates; such a cancellation must be resolved by the
    caller, never silently skipped.
    """
    ups = [Fraction(u) for u in uppers]
    los = [Fraction(b) for b in lowers]
    stop = termination_index(ups)
    if stop is None:
        raise DomainError(
            "series does not terminate: no nonpositive-integer upper parameter"
        )
    total = Fraction(1)
    term = Fraction(1)
    for k in range(stop):
        numerator = Fraction(1)
        for a in ups:
            numerator *= a + k
        denominator = Fraction(k + 1)
        for b in los:
            factor = b + k
            if factor == 0:
                raise ZeroDivisionError(
                    f"lower parameter {b} reaches zero at term {k + 1} "
                    f"before the series terminates at {stop}"
                )
            denominator *= factor
        term = term * numerator / denominator
        total += term
    return total

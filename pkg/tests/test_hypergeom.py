"""Terminating hypergeometric series and their decomposition wrappers."""

from __future__ import annotations

from fractions import Fraction

import pytest

from spincg import (
    DomainError,
    catalan,
    eval_terminating_pfq,
    lambda_univariate,
    lambda_univariate_hypergeometric,
    omega_univariate,
    omega_univariate_hypergeometric,
    riordan,
    termination_index,
)
from spincg.util import binom


def test_termination_index():
    assert termination_index([-3, Fraction(-1, 2), 5]) == 3
    assert termination_index([0, -7]) == 0
    assert termination_index([Fraction(-1, 2), 2]) is None


def test_nonterminating_series_rejected():
    with pytest.raises(DomainError):
        eval_terminating_pfq([Fraction(-1, 2)], [Fraction(1, 3)])


def test_simple_sums():
    # 1F0(-n; ; 1) = sum_k (-1)^k C(n, k) = 0 for n >= 1
    for n in range(1, 6):
        assert eval_terminating_pfq([-n], []) == 0
    # an upper parameter 0 stops the series at its first term
    assert eval_terminating_pfq([0, Fraction(7, 3)], [Fraction(1, 5)]) == 1
    # Chu-Vandermonde: 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
    def pochhammer(x, n):
        out = Fraction(1)
        for i in range(n):
            out *= x + i
        return out

    for n in range(0, 5):
        b, c = Fraction(1, 2), Fraction(7, 3)
        left = eval_terminating_pfq([-n, b], [c])
        assert left == pochhammer(c - b, n) / pochhammer(c, n)


def test_equal_parameter_pair_is_inert():
    # a coincident upper/lower pair contributes ratio 1 to every term
    base = eval_terminating_pfq([-3, Fraction(1, 2)], [Fraction(5, 3)])
    padded = eval_terminating_pfq(
        [-3, Fraction(1, 2), Fraction(7, 4)], [Fraction(5, 3), Fraction(7, 4)]
    )
    assert base == padded


def test_lower_parameter_zero_is_reported():
    with pytest.raises(ZeroDivisionError):
        eval_terminating_pfq([-3], [-1])


def test_fully_cancelled_form_would_be_wrong():
    # cancelling the integer pair (-1, -1) out of the omega series for
    # 2j=2, N=2, n=4 changes the terminating parameter and the value
    naive = eval_terminating_pfq(
        [-2, Fraction(-2, 3)], [Fraction(-5, 3)]
    )
    assert naive == 0  # terminates at K = 2 and telescopes to zero
    kept = eval_terminating_pfq(
        [-2, -1, Fraction(-2, 3)], [Fraction(-5, 3), -1]
    )
    assert kept == Fraction(1, 5)
    assert binom(5, 4) * kept == omega_univariate(2, 2, 4) == 1


def test_omega_univariate_hypergeometric_matches():
    for twice_j in range(1, 5):
        for num in range(1, 6):
            for n in range(0, twice_j * num + 1):
                expected = omega_univariate(twice_j, num, n)
                value = omega_univariate_hypergeometric(twice_j, num, n)
                assert value == expected, (twice_j, num, n)


def test_lambda_univariate_hypergeometric_matches():
    for twice_j in range(1, 5):
        for num in range(2, 6):
            # for N >= 2 identical spins, 2J_m is the parity bit of 2jN,
            # so the multiplicity ladder has floor(2jN / 2) steps
            steps = (twice_j * num) // 2
            for kappa in range(0, steps + 1):
                expected = lambda_univariate(twice_j, num, kappa)
                value = lambda_univariate_hypergeometric(twice_j, num, kappa)
                assert value == expected, (twice_j, num, kappa)


def test_catalan_identity():
    # C_v = C(3v-2, v) 3F2(-2v, -v/2, -(v-1)/2; -(3v-2)/2, -(3v-3)/2; 1)
    for v in range(0, 9):
        uppers = [-2 * v, Fraction(-v, 2), Fraction(-(v - 1), 2)]
        lowers = [Fraction(-(3 * v - 2), 2), Fraction(-(3 * v - 3), 2)]
        value = binom(3 * v - 2, v) * eval_terminating_pfq(uppers, lowers)
        assert value == catalan(v), v


def test_riordan_identity():
    # R_v = C(2v-2, v) 4F3(-v, -v/3, -(v-1)/3, -(v-2)/3;
    #                      -(2v-2)/3, -(2v-3)/3, -(2v-4)/3; 1)
    for v in range(0, 9):
        uppers = [
            -v,
            Fraction(-v, 3),
            Fraction(-(v - 1), 3),
            Fraction(-(v - 2), 3),
        ]
        lowers = [
            Fraction(-(2 * v - 2), 3),
            Fraction(-(2 * v - 3), 3),
            Fraction(-(2 * v - 4), 3),
        ]
        value = binom(2 * v - 2, v) * eval_terminating_pfq(uppers, lowers)
        assert value == riordan(v), v

"""Counting applications riding on the decomposition machinery.

The singlet (J = 0) multiplicity of a spin collection counts classical
combinatorial objects:

* 2v spin-1/2: the Catalan number C_v,
* v spin-1: the Riordan number R_v,
* r copies of a D-level system read as spin (D-1)/2: the number of
  isotropic (rotationally invariant) rank-r isomers.

None of these take a closed-form shortcut here; they run through decompose
itself, which makes them end-to-end integration checks of the core.  The
closed forms appear only in the test suite as expected values.

Bounded integer compositions reuse the Omega table in disguise: the number
of ways to write n as an ordered sum with d_a parts bounded by n_a each is
Omega at n for the spin multiset {n_a as twice-spin, d_a copies}.  Fair-dice
sum probabilities follow as exact Fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .decompose import decompose, omega_binomial
from .errors import DomainError, SpinParseError
from .spins import SpinMultiset

__all__ = [
    "catalan",
    "riordan",
    "isotropic_isomers",
    "CompositionSpec",
    "parse_composition_spec",
    "count_compositions",
    "dice_probability",
]

_PART_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def _singlet_multiplicity(twice_j: int, count: int) -> int:
    if count == 0:
        # an empty tensor product is the scalar representation
        return 1
    table = decompose(SpinMultiset.from_entries({twice_j: count}))
    return table.multiplicity(0)


def catalan(v: int) -> int:
    """Catalan number C_v as the singlet multiplicity of 2v spin-1/2."""
    if v < 0:
        raise DomainError("catalan needs v >= 0")
    return _singlet_multiplicity(1, 2 * v)


def riordan(v: int) -> int:
    """Riordan number R_v as the singlet multiplicity of v spin-1."""
    if v < 0:
        raise DomainError("riordan needs v >= 0")
    return _singlet_multiplicity(2, v)


def isotropic_isomers(dim: int, rank: int) -> int:
    """Isotropic rank-`rank` isomers of a dim-level unit.

    Each unit carries spin (dim-1)/2; the isomer count is the singlet
    multiplicity of rank copies.
    """
    if dim < 2:
        raise DomainError("isotropic_isomers needs dim >= 2")
    if rank < 0:
        raise DomainError("isotropic_isomers needs rank >= 0")
    return _singlet_multiplicity(dim - 1, rank)


@dataclass(frozen=True)
class CompositionSpec:
    """Bounded-composition problem: parts (bound, how many), order matters.

    With zero_allowed, parts range over 0 .. bound; otherwise 1 .. bound.
    """

    parts: tuple[tuple[int, int], ...]
    zero_allowed: bool = False

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a composition spec needs at least one part")
        last = 0
        for bound, count in self.parts:
            if bound <= last:
                raise ValueError("part bounds must be ascending and >= 1")
            if count < 1:
                raise ValueError("part counts must be >= 1")
            last = bound

    @classmethod
    def from_bounds(
        cls, bounds: dict[int, int], zero_allowed: bool = False
    ) -> "CompositionSpec":
        return cls(tuple(sorted(bounds.items())), zero_allowed)

    @property
    def num_parts(self) -> int:
        return sum(count for _, count in self.parts)


def parse_composition_spec(text: str, zero_allowed: bool = False) -> CompositionSpec:
    """Parse "2^5,4^3,5^4" into a CompositionSpec (bounds with counts)."""
    cleaned = re.sub(r"\s+", "", text)
    if not cleaned:
        raise SpinParseError("empty composition specification")
    bounds: dict[int, int] = {}
    for token in cleaned.split(","):
        match = _PART_RE.match(token)
        if not match:
            raise SpinParseError(f"malformed part token {token!r}")
        bound = int(match.group(1))
        count = 1 if match.group(2) is None else int(match.group(2))
        if bound == 0:
            raise SpinParseError(f"part bound 0 is not allowed, got {token!r}")
        if count == 0:
            raise SpinParseError(f"zero count in token {token!r}")
        bounds[bound] = bounds.get(bound, 0) + count
    return CompositionSpec.from_bounds(bounds, zero_allowed)


def count_compositions(spec: CompositionSpec, n: int) -> int:
    """Number of compositions of n under the spec, exactly.

    Zero-allowed parts bounded by n_a map straight onto spin channels with
    2j = n_a, so the count is Omega_n of that multiset.  Without zeros,
    subtracting 1 from every part shifts to the zero-allowed problem with
    bounds n_a - 1 and target n - N; bounds that drop to zero leave
    channels that only ever hold the forced value 1.
    """
    if spec.zero_allowed:
        multiset = SpinMultiset.from_entries(dict(spec.parts))
        return omega_binomial(multiset, n)
    shifted = {bound - 1: count for bound, count in spec.parts if bound >= 2}
    target = n - spec.num_parts
    if not shifted:
        return 1 if target == 0 else 0
    return omega_binomial(SpinMultiset.from_entries(shifted), target)


def dice_probability(num_dice: int, total: int) -> Fraction:
    """Probability that num_dice fair six-sided dice sum to total, exactly."""
    if num_dice < 1:
        raise DomainError("dice_probability needs num_dice >= 1")
    spec = CompositionSpec.from_bounds({6: num_dice}, zero_allowed=False)
    return Fraction(count_compositions(spec, total), 6**num_dice)

"""Exception types shared across the package.

The CLI maps these onto exit codes: parse errors exit 2, domain errors
exit 3, enumeration budget overruns exit 4.
"""

from __future__ import annotations


class SpinParseError(ValueError):
    """Malformed spin or composition specification text."""


class DomainError(ValueError):
    """Arguments outside an operation's mathematical domain."""


class BudgetExceededError(RuntimeError):
    """A brute-force oracle was asked to enumerate more states than allowed."""

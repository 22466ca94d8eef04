"""Integer q-polynomials, Gaussian binomials, and restricted partitions.

Everything downstream rests on three pieces of exact machinery:

* IntPolynomial, a dense polynomial in q with int coefficients.  The
  q-analogue [n]_q = 1 + q + ... + q^(n-1) of a spin dimension is the
  building block of every generating function here.
* Gaussian binomial coefficients [a choose b]_q, computed by the q-Pascal
  rule.  Their coefficients count restricted partitions, which is what makes
  them the generating functions of symmetric and antisymmetric spin
  compositions.
* The restricted partition counter p(n, m, k): partitions of k into at most
  m parts, each part at most n.  A single memoized recurrence is the source
  of truth; every other route (Gaussian coefficients, the nested phi sums)
  is cross-checked against it in the tests.

No floats anywhere; coefficients and counts are Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .util import heaviside

__all__ = [
    "IntPolynomial",
    "q_analogue",
    "q_factorial",
    "q_binomial",
    "q_binomial_by_division",
    "q_binomial_convolution",
    "restricted_partitions",
    "partitions_at_most",
    "phi",
    "phi2_closed",
    "sum_phi_equals_p",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial in q over the integers.

    coeffs[k] is the coefficient of q^k; trailing zeros are stripped on
    construction so equal polynomials compare equal.  The zero polynomial
    has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = self.coeffs
        if coeffs and coeffs[-1] == 0:
            end = len(coeffs)
            while end > 0 and coeffs[end - 1] == 0:
                end -= 1
            object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        if power < 0:
            raise ValueError("monomial power must be >= 0")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        # Schoolbook convolution; polynomial sizes here are set by 2*J_0,
        # which stays at desk scale.
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("polynomial powers must be >= 0")
        result = IntPolynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, power: int) -> "IntPolynomial":
        """Multiply by q^power."""
        if power < 0:
            raise ValueError("shift must be >= 0")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * power + self.coeffs)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Exact polynomial division; raises ArithmeticError on remainder."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dlen = len(divisor.coeffs)
        qlen = len(rem) - dlen + 1
        if qlen <= 0:
            if any(rem):
                raise ArithmeticError("polynomial division leaves a remainder")
            return IntPolynomial()
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + dlen - 1]
            if c % lead != 0:
                raise ArithmeticError("polynomial division leaves a remainder")
            quot[i] = c // lead
            if quot[i]:
                for k, d in enumerate(divisor.coeffs):
                    rem[i + k] -= quot[i] * d
        if any(rem):
            raise ArithmeticError("polynomial division leaves a remainder")
        return IntPolynomial(tuple(quot))

    def eval_one(self) -> int:
        """Value at q = 1, i.e. the coefficient sum."""
        return sum(self.coeffs)

    def coefficient_strings(self) -> list[str]:
        """Coefficients as decimal strings, for JSON output."""
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "q" if mag == 1 else f"{mag} q"
            else:
                body = f"q^{k}" if mag == 1 else f"{mag} q^{k}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def q_analogue(n: int) -> IntPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1); the q-analogue of the integer n >= 0."""
    if n < 0:
        raise DomainError("q_analogue needs n >= 0")
    return IntPolynomial((1,) * n)


def q_factorial(n: int) -> IntPolynomial:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise DomainError("q_factorial needs n >= 0")
    result = IntPolynomial.one()
    for i in range(2, n + 1):
        result = result * q_analogue(i)
    return result


# Above this the always-on cross-check against the factorial-division route
# would dominate the runtime; tests cover larger arguments explicitly.
_DIVISION_CHECK_LIMIT = 14


def q_binomial(a: int, b: int) -> IntPolynomial:
    """Gaussian binomial [a choose b]_q via the q-Pascal rule.

    Built row by row from [a choose b] = [a-1 choose b] + q^(a-b) [a-1
    choose b-1], which keeps every intermediate an integer polynomial (no
    division).  Degree is b(a-b); the coefficient of q^k counts partitions
    of k into at most b parts each at most a-b.  Returns the zero
    polynomial for b < 0 or b > a.
    """
    if a < 0:
        raise DomainError("q_binomial needs a >= 0")
    if b < 0 or b > a:
        return IntPolynomial.zero()
    one = IntPolynomial.one()
    row = [one]
    for aa in range(1, a + 1):
        prev = row
        row = [one]
        for bb in range(1, aa):
            row.append(prev[bb] + prev[bb - 1].shift(aa - bb))
        row.append(one)
    result = row[b]
    if __debug__ and a <= _DIVISION_CHECK_LIMIT:
        assert result == q_binomial_by_division(a, b)
    return result


def q_binomial_by_division(a: int, b: int) -> IntPolynomial:
    """Gaussian binomial as [a]_q! / ([b]_q! [a-b]_q!).

    Kept as an independent route for cross-checks; the division is exact,
    and a nonzero remainder raises ArithmeticError since it would signal an
    arithmetic bug, not a domain problem.
    """
    if a < 0:
        raise DomainError("q_binomial_by_division needs a >= 0")
    if b < 0 or b > a:
        return IntPolynomial.zero()
    return q_factorial(a).exact_div(q_factorial(b) * q_factorial(a - b))


@lru_cache(maxsize=None)
def _convolution_tail(depth: int, cap: int) -> IntPolynomial:
    # 1 + sum_{m=1..cap} q^m * tail(depth-1, m); the nested-sum expansion
    # of a Gaussian binomial, one summation sign per level.
    if depth == 0:
        return IntPolynomial.one()
    total = IntPolynomial.one()
    for m in range(1, cap + 1):
        total = total + _convolution_tail(depth - 1, m).shift(m)
    return total


def q_binomial_convolution(a: int, b: int) -> IntPolynomial:
    """Gaussian binomial by the nested convolution sums.

    Expands [a choose b]_q as 1 + sum over m1 + sum over m1 >= m2 + ...,
    b levels deep with m1 <= a - b.  Equals 1 when a == b (every sum is
    empty).  Slower than the q-Pascal route; used as a cross-check.
    """
    if b < 0 or a < b:
        raise DomainError("q_binomial_convolution needs a >= b >= 0")
    return _convolution_tail(b, a - b)


_P_CACHE: dict[tuple[int, int, int], int] = {}


def _p_known(n: int, m: int, k: int) -> int | None:
    if k < 0 or k > n * m:
        return 0
    if k == 0:
        return 1
    # here n >= 1 and m >= 1, otherwise n*m == 0 < k was caught above
    return _P_CACHE.get((n, m, k))


def restricted_partitions(n: int, m: int, k: int) -> int:
    """p(n, m, k): partitions of k into at most m parts, each part <= n.

    Memoized recurrence p(n, m, k) = p(n, m-1, k) + p(n-1, m, k-m): either
    fewer than m parts are used, or every one of the m parts is >= 1 and
    removing one unit from each leaves a partition of k - m with parts
    <= n - 1.  Returns 0 outside 0 <= k <= n*m; p(n, m, 0) = 1.
    Evaluated with an explicit stack, so deep tables cannot overflow the
    interpreter; the shared cache is write-once per key (last writer wins
    with identical values), which keeps it safe under threads.
    """
    if n < 0 or m < 0:
        raise DomainError("restricted_partitions needs n >= 0 and m >= 0")
    known = _p_known(n, m, k)
    if known is not None:
        return known
    stack = [(n, m, k)]
    while stack:
        nn, mm, kk = stack[-1]
        if (nn, mm, kk) in _P_CACHE:
            stack.pop()
            continue
        fewer = _p_known(nn, mm - 1, kk)
        shaved = _p_known(nn - 1, mm, kk - mm)
        if fewer is None or shaved is None:
            if fewer is None:
                stack.append((nn, mm - 1, kk))
            if shaved is None:
                stack.append((nn - 1, mm, kk - mm))
            continue
        _P_CACHE[(nn, mm, kk)] = fewer + shaved
        stack.pop()
    return _P_CACHE[(n, m, k)]


def partitions_at_most(num_parts: int, k: int) -> int:
    """p_N(k): partitions of k into at most num_parts parts, any part size.

    The unrestricted-part-size limit of p(n, N, k); parts never exceed k,
    so p(max(k, 0), N, k) realizes it exactly.
    """
    if num_parts < 0:
        raise DomainError("partitions_at_most needs num_parts >= 0")
    return restricted_partitions(max(k, 0), num_parts, k)


@lru_cache(maxsize=None)
def _phi_level(depth: int, cap: int, quota: int) -> int:
    # The nested Heaviside sums, one level per summation variable.  cap is
    # the bound on the next variable (previous variable, or a-b at the top);
    # quota is k minus everything chosen so far.  At the innermost level
    # the two step factors read H(m_last - quota) * H(quota - 1), with
    # m_last equal to the cap that was passed down.
    if depth == 0:
        return heaviside(cap - quota) * heaviside(quota - 1)
    total = 0
    for m in range(1, cap + 1):
        if quota - m < depth:
            # every remaining variable is >= 1 and the final step factor
            # needs a positive leftover, so larger m cannot contribute
            break
        total += _phi_level(depth - 1, m, quota - m)
    return total


def phi(a: int, b: int, nu: int, k: int) -> int:
    """phi^{a,b}_{nu,k}: partitions of k into exactly nu parts, each <= a-b.

    Evaluated by the nested sums over nonincreasing m_1 >= ... >= m_{nu-1}
    gated by two step factors, not by a partition recurrence, so it stays an
    independent cross-check of restricted_partitions.  phi_0 is the
    Kronecker delta at k == 0 and phi_1 = H(a-b-k) H(k-1).  The value
    depends on a and b only through the difference a - b.
    """
    if b < 0 or a < b:
        raise DomainError("phi needs a >= b >= 0")
    if nu < 0:
        raise DomainError("phi needs nu >= 0")
    if nu == 0:
        return 1 if k == 0 else 0
    return _phi_level(nu - 1, a - b, k)


def phi2_closed(a: int, b: int, k: int) -> int:
    """Closed form of phi^{a,b}_{2,k} (partitions of k into exactly 2 parts).

    Three branches by where k sits relative to the part bound a-b; floor
    division handles k = 0 via (k-1)//2 == -1.
    """
    if b < 0 or a < b:
        raise DomainError("phi2_closed needs a >= b >= 0")
    half = (k - 1) // 2
    bound = a - b
    if k <= bound:
        return (k - 1) - half
    if half < bound < k:
        return bound - half
    return 0


def sum_phi_equals_p(a: int, b: int, k: int) -> bool:
    """Whether sum over nu = 0..b of phi^{a,b}_{nu,k} equals p(a-b, b, k).

    Splitting the partitions counted by p(a-b, b, k) by their exact number
    of parts gives the phi family; this checks the two computations agree.
    """
    total = sum(phi(a, b, nu, k) for nu in range(b + 1))
    return total == restricted_partitions(a - b, b, k)

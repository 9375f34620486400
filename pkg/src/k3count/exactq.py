"""Exact truncated formal power series in q over arbitrary-precision rationals.

The central type is :class:`QSeries`: a dense list of `fractions.Fraction`
coefficients known through a fixed truncation order.  Truncation is strict:
asking for a coefficient beyond the known order raises
:class:`~k3count.errors.TruncationExceeded` instead of returning a spurious
zero, and every binary operation truncates to the shorter operand.

On top of the ring operations this module builds the specific expansions the
rest of the package consumes:

* ``eisenstein(k, N)`` — the weight-k Eisenstein series
      E_k(q) = 1 + (-2k/B_k) * sum_{n>=1} sigma_{k-1}(n) q^n
  for k in {2, 4, 6} (leading coefficients -24, 240, -504);
* ``delta(N)`` — the discriminant cusp form q * prod_{i>=1} (1 - q^i)^24;
* ``yau_zaslow(N)`` — the rational-curve generating series
  prod_{i>=1} (1 - q^i)^(-24), the multiplicative inverse of delta/q.

Bernoulli numbers are computed by the classical recurrence
sum_{j=0}^{m} binom(m+1, j) B_j = 0 with B_0 = 1 and shared with the
characteristic-class calculus.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt
from typing import Iterable, Sequence, Union

from .errors import (
    NonzeroConstantTerm,
    TruncationExceeded,
    UnsupportedWeight,
    ZeroConstantTerm,
)

#: Exact rational scalar type used for every coefficient in the package.
Rational = Fraction

_Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "QSeries",
    "series_add",
    "series_mul",
    "series_inv",
    "series_exp",
    "series_log",
    "bernoulli",
    "eisenstein",
    "delta",
    "yau_zaslow",
    "euler_product",
]


class QSeries:
    """A formal power series in q known exactly through q**trunc.

    Instances are immutable.  Coefficients are stored densely, indexed
    0..trunc, and normalized to `fractions.Fraction`.  Arithmetic keeps
    exact track of how far the result is known: sums and products carry
    the minimum truncation of their operands and never silently extend.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[_Scalar]):
        normalized = tuple(Fraction(c) for c in coeffs)
        if not normalized:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "_coeffs", normalized)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def constant(cls, value: _Scalar, trunc: int) -> "QSeries":
        """The constant series `value` known through q**trunc."""
        if trunc < 0:
            raise ValueError("truncation order must be non-negative")
        return cls([value] + [0] * trunc)

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls.constant(1, trunc)

    @classmethod
    def q_power(cls, exponent: int, trunc: int) -> "QSeries":
        """The monomial q**exponent through q**trunc (0 <= exponent <= trunc)."""
        if not 0 <= exponent <= trunc:
            raise ValueError("exponent must lie within the truncation order")
        coeffs = [0] * (trunc + 1)
        coeffs[exponent] = 1
        return cls(coeffs)

    # -- basic accessors -------------------------------------------------------

    @property
    def trunc(self) -> int:
        """Largest exponent whose coefficient is known."""
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        """All known coefficients, indexed 0..trunc."""
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.trunc:
            raise TruncationExceeded(
                f"coefficient of q^{n} requested, series known only through q^{self.trunc}"
            )
        return self._coeffs[n]

    def truncate(self, trunc: int) -> "QSeries":
        """Forget coefficients beyond q**trunc (never extends)."""
        if trunc > self.trunc:
            raise TruncationExceeded(
                f"cannot extend a series known through q^{self.trunc} to q^{trunc}"
            )
        return QSeries(self._coeffs[: trunc + 1])

    # -- ring structure --------------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return QSeries([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return QSeries([self._coeffs[i] - other._coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self._coeffs])

    def __mul__(self, other: Union["QSeries", _Scalar]) -> "QSeries":
        if isinstance(other, QSeries):
            n = min(self.trunc, other.trunc)
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                a = self._coeffs[i]
                if a:
                    for j in range(n + 1 - i):
                        b = other._coeffs[j]
                        if b:
                            out[i + j] += a * b
            return QSeries(out)
        if isinstance(other, (int, Fraction)):
            return QSeries([c * other for c in self._coeffs])
        return NotImplemented

    def __rmul__(self, other: _Scalar) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return QSeries([other * c for c in self._coeffs])
        return NotImplemented

    def __pow__(self, exponent: int) -> "QSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = QSeries.one(self.trunc)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, QSeries) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.trunc >= 8 else ""
        return f"QSeries([{shown}{tail}]; trunc={self.trunc})"

    # -- analytic-style operations ----------------------------------------------

    def inv(self) -> "QSeries":
        """Multiplicative inverse through trunc; needs a unit constant term."""
        if self._coeffs[0] == 0:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        n = self.trunc
        out = [Fraction(0)] * (n + 1)
        lead = self._coeffs[0]
        out[0] = Fraction(1) / lead
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if self._coeffs[k]:
                    acc += self._coeffs[k] * out[m - k]
            out[m] = -acc / lead
        return QSeries(out)

    def exp(self) -> "QSeries":
        """exp of a series with zero constant term, via e' = a' e."""
        if self._coeffs[0] != 0:
            raise NonzeroConstantTerm("exp needs a series with zero constant term")
        n = self.trunc
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, m + 1):
                if self._coeffs[j]:
                    acc += j * self._coeffs[j] * out[m - j]
            out[m] = acc / m
        return QSeries(out)

    def log(self) -> "QSeries":
        """log of a series with constant term 1, via (log a)' = a'/a."""
        if self._coeffs[0] != 1:
            raise ZeroConstantTerm("log needs a series with constant term 1")
        n = self.trunc
        out = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            acc = m * self._coeffs[m]
            for j in range(1, m):
                if self._coeffs[m - j]:
                    acc -= j * out[j] * self._coeffs[m - j]
            out[m] = acc / m
        return QSeries(out)


# ---------------------------------------------------------------------------
# Functional aliases for the ring operations.
# ---------------------------------------------------------------------------

def series_add(a: QSeries, b: QSeries) -> QSeries:
    """Coefficientwise sum through the smaller truncation."""
    return a + b


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product through the smaller truncation."""
    return a * b


def series_inv(a: QSeries) -> QSeries:
    """Multiplicative inverse; raises ZeroConstantTerm for non-units."""
    return a.inv()


def series_exp(a: QSeries) -> QSeries:
    """Exponential; raises NonzeroConstantTerm unless a[0] = 0."""
    return a.exp()


def series_log(a: QSeries) -> QSeries:
    """Logarithm; raises ZeroConstantTerm unless a[0] = 1."""
    return a.log()


# ---------------------------------------------------------------------------
# Bernoulli numbers.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """The m-th Bernoulli number (convention B_1 = -1/2).

    Computed by the recurrence sum_{j=0}^{m} binom(m+1, j) B_j = 0 with
    B_0 = 1, entirely in exact rational arithmetic.
    """
    if m < 0:
        raise ValueError("Bernoulli numbers are indexed by non-negative integers")
    if m == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(m):
        acc += comb(m + 1, j) * bernoulli(j)
    return -acc / (m + 1)


# ---------------------------------------------------------------------------
# Divisor sums (multiplicative route; the tests carry an independent
# trial-division oracle).
# ---------------------------------------------------------------------------

def _factorize(n: int):
    """Prime factorization of n >= 1 as (prime, exponent) pairs."""
    factors = []
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if remaining > 1:
        factors.append((remaining, 1))
    return factors


def _sigma(power: int, n: int) -> int:
    """sum of d**power over divisors d of n, by the multiplicative formula."""
    result = 1
    for p, e in _factorize(n):
        result *= (p ** (power * (e + 1)) - 1) // (p ** power - 1)
    return result


# ---------------------------------------------------------------------------
# Named expansions.
# ---------------------------------------------------------------------------

def eisenstein(k: int, trunc: int) -> QSeries:
    """The weight-k Eisenstein series through q**trunc, for k in {2, 4, 6}.

    E_k(q) = 1 + (-2k/B_k) * sum_{n>=1} sigma_{k-1}(n) q^n.  The leading
    coefficients are -24 (k=2), 240 (k=4) and -504 (k=6).  Weight 2 is only
    quasi-modular but is needed as the genus-one universal factor.
    """
    if k not in (2, 4, 6):
        raise UnsupportedWeight(f"Eisenstein expansion implemented for k in {{2, 4, 6}}, got {k}")
    if trunc < 0:
        raise ValueError("truncation order must be non-negative")
    lead = Fraction(-2 * k) / bernoulli(k)
    coeffs = [Fraction(1)]
    for n in range(1, trunc + 1):
        coeffs.append(lead * _sigma(k - 1, n))
    return QSeries(coeffs)


def euler_product(trunc: int) -> QSeries:
    """prod_{i>=1} (1 - q^i) through q**trunc, via the pentagonal expansion.

    The product equals sum_{k in Z} (-1)^k q^{k(3k-1)/2}, so only O(sqrt(N))
    coefficients are nonzero.
    """
    coeffs = [Fraction(0)] * (trunc + 1)
    k = 0
    while True:
        placed = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e <= trunc:
                coeffs[e] += (-1) ** (kk % 2)
                placed = True
        if not placed:
            break
        k += 1
    return QSeries(coeffs)


def delta(trunc: int) -> QSeries:
    """The discriminant cusp form q * prod_{i>=1} (1 - q^i)^24 through q**trunc.

    Its q^1 coefficient is 1 and its constant term is 0.
    """
    if trunc < 0:
        raise ValueError("truncation order must be non-negative")
    if trunc == 0:
        return QSeries([0])
    product = euler_product(trunc - 1) ** 24
    return QSeries([Fraction(0), *product.coeffs])


def yau_zaslow(trunc: int) -> QSeries:
    """prod_{i>=1} (1 - q^i)^(-24) through q**trunc.

    This is the generating series of rational-curve counts on a single K3
    surface; all coefficients are positive integers, and
    delta(N) * yau_zaslow(N) = q exactly through q**N.
    """
    if trunc < 0:
        raise ValueError("truncation order must be non-negative")
    return (euler_product(trunc) ** 24).inv()

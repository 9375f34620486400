"""Graded-commutative characteristic-class calculus for surface fibrations.

Polynomials live in three symbols: the fiberwise Chern classes c1 (degree 1)
and c2 (degree 2) of a surface, and a line-bundle class C (degree 1).  Every
polynomial carries a hard degree cap; multiplication truncates above it.

Provided expansions:

* ``todd(D)`` — the Todd polynomial of a rank-2 bundle through degree D,
  assembled from the Bernoulli expansion of t/(1 - exp(-t)) per Chern root
  and the Newton power-sum recursion p_{m+1} = c1 p_m - c2 p_{m-1}
  (p_0 = 2, p_1 = c1), so no root ever appears explicitly;
* ``ch_line(D)`` — the Chern character exp(C) of a line bundle;
* ``fiber_integrate`` — formal integration over a 2-dimensional fiber:
  each monomial c1^a c2^b C^c becomes an opaque pushforward symbol
  x_{a,b,c} of base degree (a + 2b + c) - 2, and lower degrees die;
* ``k3_substitution`` — the specialization for K3 fibers: fiberwise c1
  vanishes, c2 integrates to 24, C^2 is supplied by the caller;
* ``segre_from_characters`` — the Segre coefficients
  S(t) = exp(sum_i (-1)^i (i-1)! ch_i t^i), the power-series inverse of
  the total Chern class;
* ``surface_rr_virtual_rank`` — the virtual rank 2 + C^2/2 of the
  fiberwise index bundle, the surface Riemann-Roch value the degree-0
  pushforward reproduces under the K3 substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from .errors import OddSelfIntersection
from .exactq import QSeries, bernoulli

__all__ = [
    "GradedPoly",
    "PushforwardExpression",
    "c1",
    "c2",
    "curve_class",
    "todd",
    "ch_line",
    "fiber_integrate",
    "k3_substitution",
    "k3_grr_rank",
    "segre_from_characters",
    "surface_rr_virtual_rank",
    "OddSelfIntersection",
]

Monomial = Tuple[int, int, int]  # exponents of (c1, c2, C)
_Scalar = Union[int, Fraction]


def _degree(mon: Monomial) -> int:
    a, b, c = mon
    return a + 2 * b + c


class GradedPoly:
    """Polynomial in c1, c2, C truncated by total degree.

    Degrees: deg c1 = deg C = 1, deg c2 = 2.  Terms above ``max_degree``
    are rejected at construction and silently truncated by multiplication,
    mirroring how characteristic classes live on a fixed-dimension space.
    """

    __slots__ = ("_max_degree", "_terms")

    def __init__(self, terms: Mapping[Monomial, _Scalar], max_degree: int):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        cleaned: Dict[Monomial, Fraction] = {}
        for mon, coeff in terms.items():
            a, b, c = (int(e) for e in mon)
            if a < 0 or b < 0 or c < 0:
                raise ValueError(f"negative exponent in monomial {mon}")
            value = Fraction(coeff)
            if value == 0:
                continue
            if _degree((a, b, c)) > max_degree:
                raise ValueError(
                    f"monomial {mon} has degree {_degree((a, b, c))} > max_degree {max_degree}"
                )
            cleaned[(a, b, c)] = value
        self._max_degree = max_degree
        self._terms = cleaned

    # -- accessors -----------------------------------------------------------

    @property
    def max_degree(self) -> int:
        return self._max_degree

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mon: Monomial) -> Fraction:
        if _degree(mon) > self._max_degree:
            raise ValueError(
                f"monomial {mon} exceeds max_degree {self._max_degree}; "
                "its coefficient is unknown, not zero"
            )
        return self._terms.get(tuple(mon), Fraction(0))

    def graded_part(self, degree: int) -> "GradedPoly":
        """The homogeneous part of the given total degree."""
        return GradedPoly(
            {m: c for m, c in self._terms.items() if _degree(m) == degree},
            self._max_degree,
        )

    # -- ring structure --------------------------------------------------------

    @classmethod
    def constant(cls, value: _Scalar, max_degree: int) -> "GradedPoly":
        return cls({(0, 0, 0): Fraction(value)}, max_degree)

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            return NotImplemented
        cap = min(self._max_degree, other._max_degree)
        out: Dict[Monomial, Fraction] = {
            m: c for m, c in self._terms.items() if _degree(m) <= cap
        }
        for m, c in other._terms.items():
            if _degree(m) <= cap:
                out[m] = out.get(m, Fraction(0)) + c
        return GradedPoly(out, cap)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "GradedPoly":
        return GradedPoly({m: -c for m, c in self._terms.items()}, self._max_degree)

    def __mul__(self, other: Union["GradedPoly", _Scalar]) -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            return GradedPoly(
                {m: c * other for m, c in self._terms.items()}, self._max_degree
            )
        if not isinstance(other, GradedPoly):
            return NotImplemented
        cap = min(self._max_degree, other._max_degree)
        out: Dict[Monomial, Fraction] = {}
        for (a1, b1, c1_), v1 in self._terms.items():
            for (a2, b2, c2_), v2 in other._terms.items():
                mon = (a1 + a2, b1 + b2, c1_ + c2_)
                if _degree(mon) <= cap:
                    out[mon] = out.get(mon, Fraction(0)) + v1 * v2
        return GradedPoly(out, cap)

    def __rmul__(self, other: _Scalar) -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "GradedPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = GradedPoly.constant(1, self._max_degree)
        for _ in range(exponent):
            result = result * self
        return result

    def exp(self) -> "GradedPoly":
        """exp of a polynomial with zero constant term (nilpotent here)."""
        if self._terms.get((0, 0, 0), Fraction(0)) != 0:
            raise ValueError("exp needs a polynomial with zero constant term")
        result = GradedPoly.constant(1, self._max_degree)
        power = GradedPoly.constant(1, self._max_degree)
        for k in range(1, self._max_degree + 1):
            power = power * self
            if not power._terms:
                break
            result = result + power * Fraction(1, factorial(k))
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPoly)
            and self._max_degree == other._max_degree
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        if not self._terms:
            return f"GradedPoly(0; max_degree={self._max_degree})"
        bits = []
        for mon in sorted(self._terms):
            a, b, c = mon
            sym = "".join(
                part
                for part, e in (("c1", a), ("c2", b), ("C", c))
                for part in ([f"{part}^{e}" if e > 1 else part] if e else [])
            )
            bits.append(f"{self._terms[mon]}*{sym}" if sym else str(self._terms[mon]))
        return f"GradedPoly({' + '.join(bits)}; max_degree={self._max_degree})"


def c1(max_degree: int) -> GradedPoly:
    """The fiberwise first Chern class symbol."""
    return GradedPoly({(1, 0, 0): 1}, max_degree)


def c2(max_degree: int) -> GradedPoly:
    """The fiberwise second Chern class symbol."""
    return GradedPoly({(0, 1, 0): 1}, max_degree)


def curve_class(max_degree: int) -> GradedPoly:
    """The line-bundle (fiberwise curve) class symbol C."""
    return GradedPoly({(0, 0, 1): 1}, max_degree)


# ---------------------------------------------------------------------------
# Todd class of a rank-2 bundle.
# ---------------------------------------------------------------------------

def _todd_root_series(trunc: int) -> QSeries:
    """t/(1 - exp(-t)) through t^trunc: coefficients (-1)^k B_k / k!."""
    return QSeries(
        [Fraction((-1) ** k) * bernoulli(k) / factorial(k) for k in range(trunc + 1)]
    )


def _power_sums(max_degree: int) -> List[GradedPoly]:
    """Newton power sums p_m(c1, c2) for m = 0..max_degree."""
    sums = [GradedPoly.constant(2, max_degree)]
    if max_degree >= 1:
        sums.append(c1(max_degree))
    for _ in range(2, max_degree + 1):
        sums.append(c1(max_degree) * sums[-1] - c2(max_degree) * sums[-2])
    return sums

def todd(max_degree: int) -> GradedPoly:
    """Todd polynomial of a rank-2 bundle through the given total degree.

    Computed as exp(sum_m a_m p_m) where sum_m a_m t^m is the logarithm of
    the single-root series t/(1 - exp(-t)) and p_m are the Newton power
    sums in (c1, c2); the two Chern roots never appear individually.
    Degree <= 2 expansion: 1 + c1/2 + (c1^2 + c2)/12.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    log_root = _todd_root_series(max_degree).log()
    sums = _power_sums(max_degree)
    exponent = GradedPoly({}, max_degree)
    for m in range(1, max_degree + 1):
        if log_root[m]:
            exponent = exponent + sums[m] * log_root[m]
    return exponent.exp()


def ch_line(max_degree: int) -> GradedPoly:
    """Chern character exp(C) of a line bundle, through the degree cap."""
    return GradedPoly(
        {(0, 0, k): Fraction(1, factorial(k)) for k in range(max_degree + 1)},
        max_degree,
    )


# ---------------------------------------------------------------------------
# Fiber integration.
# ---------------------------------------------------------------------------

class PushforwardExpression:
    """A linear combination of opaque pushforward symbols x_{a,b,c}.

    Each symbol stands for the fiber integral of c1^a c2^b C^c and carries
    base degree (a + 2b + c) - fiber_dim.  The symbols receive no geometric
    meaning here; callers evaluate them through substitutions such as
    :func:`k3_substitution`.
    """

    __slots__ = ("_fiber_dim", "_terms")

    def __init__(self, terms: Mapping[Monomial, _Scalar], fiber_dim: int):
        self._fiber_dim = fiber_dim
        self._terms = tuple(
            sorted((tuple(m), Fraction(c)) for m, c in terms.items() if Fraction(c) != 0)
        )

    @property
    def fiber_dim(self) -> int:
        return self._fiber_dim

    @property
    def terms(self) -> tuple:
        return self._terms

    def as_dict(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def base_degree_part(self, degree: int) -> Dict[Monomial, Fraction]:
        """Symbols of the given base degree, as a monomial -> coefficient map."""
        return {
            m: c
            for m, c in self._terms
            if _degree(m) - self._fiber_dim == degree
        }

    def evaluate(self, values: Mapping[Monomial, _Scalar], default: _Scalar = 0) -> Fraction:
        """Sum coefficient * value over all symbols; absent symbols get `default`."""
        total = Fraction(0)
        for m, c in self._terms:
            total += c * Fraction(values.get(m, default))
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PushforwardExpression)
            and self._fiber_dim == other._fiber_dim
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        bits = [f"{c}*x_{{{a},{b},{d}}}" for (a, b, d), c in self._terms]
        return f"PushforwardExpression({' + '.join(bits) or '0'})"


def fiber_integrate(poly: GradedPoly, fiber_dim: int = 2) -> PushforwardExpression:
    """Formal integration over the fiber: degree drops by fiber_dim.

    Monomials of total degree below fiber_dim integrate to zero; every
    other monomial becomes its opaque pushforward symbol with the same
    coefficient.  Linear by construction.
    """
    return PushforwardExpression(
        {m: c for m, c in poly.terms.items() if _degree(m) >= fiber_dim},
        fiber_dim,
    )


def k3_substitution(c_squared: int) -> Dict[Monomial, Fraction]:
    """Evaluation map for K3 fibers on degree-2 monomial symbols.

    Fiberwise c1 vanishes (killing every symbol with a c1 factor), the
    fiberwise Euler number integrates c2 to 24, and the self-intersection
    C^2 is the caller's input.  Symbols absent from the map evaluate to 0.
    """
    return {
        (0, 0, 2): Fraction(c_squared),
        (0, 1, 0): Fraction(24),
    }


def k3_grr_rank(c_squared: int) -> Fraction:
    """Degree-0 pushforward of Todd * ch(line) evaluated on a K3 fiber.

    Independent route to the virtual rank: integrates the degree-2 part of
    the rank-2 Todd class times exp(C) over the fiber and specializes.
    Equals 2 + C^2/2, matching :func:`surface_rr_virtual_rank`.
    """
    push = fiber_integrate(todd(2) * ch_line(2))
    sub = k3_substitution(c_squared)
    return Fraction(
        sum(
            (c * sub.get(m, Fraction(0)) for m, c in push.base_degree_part(0).items()),
            Fraction(0),
        )
    )


# ---------------------------------------------------------------------------
# Segre coefficients.
# ---------------------------------------------------------------------------

def segre_from_characters(ch: Sequence[_Scalar], max_degree: int = None) -> List[Fraction]:
    """Segre coefficients s_1..s_D from Chern characters ch_1..ch_D.

    S(t) = exp(sum_{i>=1} (-1)^i (i-1)! ch_i t^i); the result is the
    power-series inverse of the total Chern class of the same bundle.
    """
    if max_degree is None:
        max_degree = len(ch)
    if len(ch) < max_degree:
        raise ValueError(f"need ch_1..ch_{max_degree}, got only {len(ch)} entries")
    exponent = QSeries(
        [Fraction(0)]
        + [
            Fraction((-1) ** i * factorial(i - 1)) * Fraction(ch[i - 1])
            for i in range(1, max_degree + 1)
        ]
    )
    return list(exponent.exp().coeffs[1:])


# ---------------------------------------------------------------------------
# Surface Riemann-Roch.
# ---------------------------------------------------------------------------

def surface_rr_virtual_rank(c_squared: int) -> int:
    """Virtual rank 2 + C^2/2 of the fiberwise index bundle on a K3 fiber.

    Self-intersections of fiberwise classes are even; odd input is refused.
    """
    if c_squared % 2 != 0:
        raise OddSelfIntersection(
            f"fiberwise classes have even self-intersection, got {c_squared}"
        )
    return 2 + c_squared // 2

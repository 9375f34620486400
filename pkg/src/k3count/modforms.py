"""Level-1 modular forms in the monomial basis E4^a E6^b.

The weight-4 and weight-6 Eisenstein series generate the ring of level-1
modular forms freely, so the weight-k space has the monomials
{E4^a E6^b : 4a + 6b = k} as a basis.  Its dimension is the number of
non-negative solutions (a, b) — equal to floor(k/12)+1 except in weights
congruent to 2 mod 12, where it is floor(k/12); in particular it is 1 in
weights 0, 4, 6, 8, 10, 14 and 0 in weight 2.

``pin_normalized`` exploits the one-dimensional weights: a holomorphic form
of such a weight with constant term 1 is unique, which is exactly how the
regularized theta factor of the counting pipeline is produced.  Weight 12
and beyond (or the empty weight-2 space) cannot be pinned by the constant
term alone and raise :class:`~k3count.errors.Underdetermined`.

``express_in_basis`` solves for the coordinates of a candidate expansion in
the monomial basis using exact rational elimination, then checks every
remaining known coefficient; any mismatch means the series is not the
expansion of a form of that weight.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .errors import NotInSpace, OddWeightWarning, PipelineInvariantError, Underdetermined
from .exactq import QSeries, eisenstein

__all__ = [
    "ModFormSpace",
    "space",
    "expand",
    "pin_normalized",
    "express_in_basis",
    "NotInSpace",
    "OddWeightWarning",
    "Underdetermined",
]


@dataclass(frozen=True)
class ModFormSpace:
    """The weight-k space presented by its monomial basis in (E4, E6).

    `monomials` lists the exponent pairs (a, b) with 4a + 6b = weight,
    ordered by descending power of the weight-4 generator.
    """

    weight: int
    monomials: tuple

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def space(weight: int) -> ModFormSpace:
    """Enumerate the monomial basis of the given weight.

    Odd weights carry no level-1 forms: an empty space is returned and an
    :class:`OddWeightWarning` is emitted.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative")
    if weight % 2 == 1:
        warnings.warn(
            f"no level-1 forms of odd weight {weight}; returning the empty space",
            OddWeightWarning,
            stacklevel=2,
        )
        return ModFormSpace(weight, ())
    monomials = [
        (a, (weight - 4 * a) // 6)
        for a in range(weight // 4, -1, -1)
        if (weight - 4 * a) % 6 == 0
    ]
    return ModFormSpace(weight, tuple(monomials))


def expand(a: int, b: int, trunc: int) -> QSeries:
    """q-expansion of E4^a * E6^b through q**trunc."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be non-negative")
    return eisenstein(4, trunc) ** a * eisenstein(6, trunc) ** b


def pin_normalized(weight: int, trunc: int) -> QSeries:
    """The unique weight-k form with constant term 1, when dim = 1.

    Returns the single monomial expansion of a one-dimensional weight
    (its constant term is automatically 1).  Raises Underdetermined when
    the weight space is not one-dimensional, in which case the constant
    term alone cannot pin a form and the caller must supply more data.
    """
    sp = space(weight)
    if sp.dimension != 1:
        raise Underdetermined(
            f"weight-{weight} space has dimension {sp.dimension}; "
            "the constant term pins a form only in dimension 1"
        )
    a, b = sp.monomials[0]
    return expand(a, b, trunc)


def _solve_exact(matrix: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """Solve a small square rational system by Gaussian elimination."""
    n = len(matrix)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            raise PipelineInvariantError(
                "basis expansion matrix is singular; the monomial basis must be "
                "independent in its first dim coefficients"
            )
        m[col], m[pivot_row] = m[pivot_row], m[col]
        pivot = m[col][col]
        m[col] = [x / pivot for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def express_in_basis(f: QSeries, weight: int) -> List[Fraction]:
    """Coordinates of `f` over the weight-k monomial basis, verified exactly.

    Solves the square linear system formed by the first dim coefficients,
    then demands that the resulting combination reproduce every further
    known coefficient of `f`.  A zero-dimensional space or any residual
    mismatch raises NotInSpace: the input is not a weight-k form.
    """
    sp = space(weight)
    d = sp.dimension
    if d == 0:
        raise NotInSpace(
            f"the weight-{weight} space is zero-dimensional; nothing expands there"
        )
    if f.trunc + 1 < d:
        raise ValueError(
            f"need at least {d} known coefficients to express a weight-{weight} form, "
            f"got {f.trunc + 1}"
        )
    basis = [expand(a, b, f.trunc) for a, b in sp.monomials]
    matrix = [[basis[j][i] for j in range(d)] for i in range(d)]
    rhs = [f[i] for i in range(d)]
    coords = _solve_exact(matrix, rhs)
    for n in range(f.trunc + 1):
        combined = sum((coords[j] * basis[j][n] for j in range(d)), Fraction(0))
        if combined != f[n]:
            raise NotInSpace(
                f"series is not a weight-{weight} form: mismatch at q^{n} "
                f"(expected {combined}, series has {f[n]})"
            )
    return coords

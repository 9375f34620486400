"""Assembly of the nodal-curve generating function for a K3 fibration.

For a validated fibration whose fiberwise lattice M is even and
unimodular of signature (1, rank-1), the transcendental lattice (the
orthogonal complement of M inside the rank-22 K3 lattice) is even and
unimodular of signature (2, 20-rank M), so it is determined up to
isomorphism by its invariants.  The generating function of virtual
nodal-curve counts factorizes as

    F(q) = prefactor * (q/Delta normalization) * Theta^reg(q)

where the middle factor is the single-K3 rational-curve series
1/product((1-q^i)^24), Theta^reg is the holomorphic weight-
(rank complement / 2) modular form with constant term 1 (pinned
uniquely whenever that weight space is one-dimensional), and the
prefactor is minus the moduli-volume degree of the generic deformation:
-(2-2g) for a Calabi-Yau fibration over a genus-g base, and 0 when the
Calabi-Yau flag is off (no deformation argument applies).

Isometrically trivial families (whose own volume degree is 0, the
whole base degree sitting in fractional defects) still use the
deformation-invariant prefactor; the report carries both numbers plus
the defect decomposition so nothing is hidden.

``negative_definite_reference`` runs the identical convolution plumbing
with an enumerable definite theta series in place of the modularity
pin, giving an independent cross-check of the pipeline.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import (
    ExperimentalWarning,
    NonUnimodular,
    OddLattice,
    PipelineInvariantError,
    UnderdeterminedThetaWarning,
    UnsupportedGenus,
    ValidationFailure,
)
from .exactq import QSeries, eisenstein, yau_zaslow
from .fibration import K3FibrationSpec, defect_sum, validate, wp_degree
from .lattice import (
    K3_RANK,
    Lattice,
    LatticeInvariants,
    classify_indefinite_even_unimodular,
    invariants,
    theta_definite,
)
from . import modforms

__all__ = [
    "CountingReport",
    "theta_reg_for",
    "generating_function",
    "genus_series",
    "negative_definite_reference",
]


@dataclass(frozen=True)
class CountingReport:
    """All factors of the curve-count generating function, kept separate."""

    spec_name: str
    fiber_lattice_invariants: LatticeInvariants
    transcendental_invariants: LatticeInvariants
    weight: int
    theta_reg: QSeries
    theta_label: str
    wp_deg: Fraction
    defect_sum: Fraction
    prefactor: Fraction
    F: QSeries
    warnings: Tuple[str, ...] = ()

    def n(self, delta: int) -> int:
        """Virtual count in degree delta: the q^delta coefficient of F."""
        value = self.F[delta]
        if value.denominator != 1:
            raise PipelineInvariantError(
                f"coefficient n({delta}) = {value} is not an integer"
            )
        return int(value)


def _monomial_label(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("E4" if a == 1 else f"E4^{a}")
    if b:
        parts.append("E6" if b == 1 else f"E6^{b}")
    return "*".join(parts) if parts else "1"


def _check_fiber_lattice(inv: LatticeInvariants) -> None:
    if not inv.is_even:
        raise OddLattice(
            f"fiberwise lattice must be even, got an odd form of rank {inv.rank}"
        )
    if not inv.is_unimodular:
        raise NonUnimodular(
            f"fiberwise lattice has determinant {inv.determinant}; the "
            "factorization pipeline covers only the unimodular case"
        )
    if inv.signature != (1, inv.rank - 1):
        raise ValueError(
            f"fiberwise lattice must have signature (1, rank-1), got {inv.signature}"
        )
    if inv.rank > K3_RANK - 2:
        raise ValueError(
            f"fiberwise lattice rank {inv.rank} exceeds {K3_RANK - 2}"
        )


def _theta_bundle(inv: LatticeInvariants, trunc: int):
    """(weight, series, label, complement invariants, warning texts)."""
    perp_signature = (2, K3_RANK - 2 - inv.rank)
    perp = classify_indefinite_even_unimodular(perp_signature)
    perp_inv = invariants(perp.lattice)
    if perp_inv.rank != K3_RANK - inv.rank:
        raise PipelineInvariantError("complement rank bookkeeping failed")
    weight, remainder = divmod(perp_inv.rank, 2)
    if remainder:
        raise PipelineInvariantError("complement rank must be even")

    space = modforms.space(weight)
    notes: List[str] = []
    if space.dimension == 1:
        series = modforms.pin_normalized(weight, trunc)
        a, b = space.monomials[0]
        label = _monomial_label(a, b)
    else:
        message = (
            f"weight-{weight} forms with constant term 1 are not unique "
            f"(dimension {space.dimension}); falling back to theta = 1"
        )
        _warnings.warn(message, UnderdeterminedThetaWarning, stacklevel=3)
        notes.append(message)
        series = QSeries.constant(1, trunc)
        label = "1"
    return weight, series, label, perp_inv, notes


def theta_reg_for(m_lattice: Lattice, trunc: int) -> Tuple[int, QSeries]:
    """Weight and pinned theta factor for an even unimodular fiberwise lattice.

    The complement inside the K3 lattice has signature (2, 20 - rank) and
    is reconstructed by classification; the factor is the unique
    weight-(rank complement / 2) form with constant term 1 when that
    space is one-dimensional, else the constant series 1 with an
    :class:`UnderdeterminedThetaWarning`.
    """
    inv = invariants(m_lattice)
    _check_fiber_lattice(inv)
    weight, series, _, _, _ = _theta_bundle(inv, trunc)
    return weight, series


def _assemble(
    prefactor: Fraction, theta: QSeries, trunc: int
) -> QSeries:
    series = yau_zaslow(trunc) * theta * prefactor
    for d, c in enumerate(series.coeffs):
        if c.denominator != 1:
            raise PipelineInvariantError(
                f"non-integer coefficient {c} at degree {d}; all factor "
                "series are integral, so this indicates a bug"
            )
    return series


def generating_function(spec: K3FibrationSpec, trunc: int) -> CountingReport:
    """Factorized generating function of virtual nodal-curve counts.

    Raises :class:`ValidationFailure` when the spec has validation
    errors and :class:`NonUnimodular` when the fiberwise lattice falls
    outside the pipeline.  The prefactor is -(2-2g) for Calabi-Yau
    specs (their generic deformation's volume degree), 0 otherwise; the
    spec's own volume degree and defect sum are reported alongside.
    """
    diagnostics = validate(spec)
    if any(d.severity == "error" for d in diagnostics):
        raise ValidationFailure(diagnostics)

    inv = invariants(spec.fiber_lattice)
    _check_fiber_lattice(inv)
    weight, theta, label, perp_inv, notes = _theta_bundle(inv, trunc)

    defects = defect_sum(spec)
    if spec.calabi_yau:
        wp = wp_degree(spec)
        prefactor = Fraction(-spec.base_degree)
    else:
        wp = Fraction(0)
        prefactor = Fraction(0)

    series = _assemble(prefactor, theta, trunc)
    return CountingReport(
        spec_name=spec.name,
        fiber_lattice_invariants=inv,
        transcendental_invariants=perp_inv,
        weight=weight,
        theta_reg=theta,
        theta_label=label,
        wp_deg=wp,
        defect_sum=defects,
        prefactor=prefactor,
        F=series,
        warnings=tuple(notes),
    )


def genus_series(spec: K3FibrationSpec, genus: int, trunc: int) -> QSeries:
    """Generating function for genus-0 or (experimentally) genus-1 counts.

    Genus 0 is :func:`generating_function` itself.  Genus 1 multiplies
    by the quasi-modular weight-2 Eisenstein series; the ratio is firmly
    established but the overall normalization is not, so the result is
    flagged with :class:`ExperimentalWarning`.  Higher genus has no
    closed universal factor here.
    """
    if genus == 0:
        return generating_function(spec, trunc).F
    if genus == 1:
        base = generating_function(spec, trunc).F
        _warnings.warn(
            "genus-1 series uses the weight-2 quasi-modular multiplier with "
            "an unverified overall normalization",
            ExperimentalWarning,
            stacklevel=2,
        )
        return base * eisenstein(2, trunc)
    raise UnsupportedGenus(
        f"no universal genus-{genus} factor is implemented (only 0 and 1)"
    )


def negative_definite_reference(
    mock_perp: Lattice, trunc: int, prefactor: Fraction = Fraction(-2)
) -> QSeries:
    """Pipeline output with an enumerable definite theta series as the factor.

    Substitutes the vector-count theta series of a definite lattice for
    the modularity-pinned factor, exercising the identical convolution
    plumbing against exhaustive enumeration (for example, an E8 block
    with reversed sign reproduces the weight-4 Eisenstein factor).
    Raises :class:`IndefiniteLattice` on indefinite input.
    """
    theta = theta_definite(mock_perp, trunc)
    return _assemble(Fraction(prefactor), theta, trunc)

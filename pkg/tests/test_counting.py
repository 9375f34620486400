"""Tests for the curve-count assembly: transcendental-lattice weight, the
pinned theta factor, the factorized generating function, and the
enumerable-theta reference pipeline."""

import os
import sys
import warnings
from fractions import Fraction

import pytest

from k3count.counting import (
    CountingReport,
    generating_function,
    genus_series,
    negative_definite_reference,
    theta_reg_for,
)
from k3count.errors import (
    IndefiniteLattice,
    NonUnimodular,
    OddLattice,
    UnderdeterminedThetaWarning,
    ExperimentalWarning,
    UnsupportedGenus,
    ValidationFailure,
)
from k3count.exactq import QSeries, eisenstein, yau_zaslow
from k3count.fibration import K3FibrationSpec, SingularFiberSpec
from k3count.lattice import Lattice, build, dsum, e8, neg, rank1, theta_definite
from k3count.modforms import expand

sys.path.insert(0, os.path.dirname(__file__))
from oracles import triple_convolution_oracle  # noqa: E402


def z0_spec() -> K3FibrationSpec:
    return K3FibrationSpec(
        name="z0",
        base_genus=0,
        calabi_yau=True,
        iso_trivial=True,
        fiber_lattice=build("H + -E8"),
        fibers=(
            SingularFiberSpec(
                count=24,
                kind="quasi_homogeneous",
                monodromy_order=12,
                exponents=(12, 3, 2),
            ),
        ),
    )


def w0_spec() -> K3FibrationSpec:
    return K3FibrationSpec(
        name="w0",
        base_genus=0,
        calabi_yau=True,
        iso_trivial=True,
        fiber_lattice=build("H"),
        fibers=(
            SingularFiberSpec(
                count=84,
                kind="quasi_homogeneous",
                monodromy_order=42,
                exponents=(7, 3, 2),
            ),
        ),
    )


# ---------------------------------------------------------------------------
# theta_reg_for: weight and pinned series per fiberwise lattice.
# ---------------------------------------------------------------------------

class TestThetaRegFor:
    def test_rank_10_gives_weight_6(self):
        weight, series = theta_reg_for(build("H + -E8"), 6)
        assert weight == 6
        assert series.coeffs == eisenstein(6, 6).coeffs

    def test_rank_2_gives_weight_10(self):
        weight, series = theta_reg_for(build("H"), 4)
        assert weight == 10
        assert series.coeffs == expand(1, 1, 4).coeffs

    def test_rank_18_underdetermined_falls_back_to_one(self):
        with pytest.warns(UnderdeterminedThetaWarning):
            weight, series = theta_reg_for(build("H + 2(-E8)"), 3)
        assert weight == 2
        assert series.coeffs == (1, 0, 0, 0)

    def test_weight_rank_ledger(self):
        for expr, rank in (("H", 2), ("H + -E8", 10), ("H + 2(-E8)", 18)):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", UnderdeterminedThetaWarning)
                weight, _ = theta_reg_for(build(expr), 1)
            assert weight * 2 + rank == 22

    def test_non_unimodular_rejected(self):
        with pytest.raises(NonUnimodular):
            theta_reg_for(rank1(4), 3)

    def test_odd_lattice_rejected(self):
        with pytest.raises(OddLattice):
            theta_reg_for(rank1(1), 3)

    def test_wrong_signature_rejected(self):
        with pytest.raises(ValueError):
            theta_reg_for(dsum(build("H"), build("H")), 3)

    def test_constant_term_is_one(self):
        for expr in ("H", "H + -E8"):
            _, series = theta_reg_for(build(expr), 2)
            assert series[0] == 1


# ---------------------------------------------------------------------------
# generating_function: the full factorized pipeline.
# ---------------------------------------------------------------------------

class TestGeneratingFunction:
    def test_z0_report(self):
        rep = generating_function(z0_spec(), 5)
        assert rep.spec_name == "z0"
        assert rep.weight == 6
        assert rep.theta_label == "E6"
        assert rep.fiber_lattice_invariants.rank == 10
        assert rep.fiber_lattice_invariants.signature == (1, 9)
        assert rep.transcendental_invariants.rank == 12
        assert rep.transcendental_invariants.signature == (2, 10)
        assert abs(rep.transcendental_invariants.determinant) == 1
        assert rep.transcendental_invariants.is_even
        assert rep.wp_deg == 0
        assert rep.defect_sum == 2
        assert rep.prefactor == -2
        assert rep.n(0) == -2
        assert rep.n(1) == 960

    def test_z0_matches_triple_convolution_oracle(self):
        rep = generating_function(z0_spec(), 5)
        prefactor = [-2] + [0] * 5
        yz = [Fraction(c) for c in yau_zaslow(5).coeffs]
        e6 = [Fraction(c) for c in eisenstein(6, 5).coeffs]
        expected = triple_convolution_oracle(prefactor, yz, e6, 5)
        assert list(rep.F.coeffs) == expected

    def test_z0_closed_form(self):
        rep = generating_function(z0_spec(), 5)
        closed = yau_zaslow(5) * eisenstein(6, 5) * Fraction(-2)
        assert rep.F.coeffs == closed.coeffs

    def test_w0_report(self):
        rep = generating_function(w0_spec(), 3)
        assert rep.weight == 10
        assert rep.theta_label == "E4*E6"
        assert rep.n(1) == 480
        closed = yau_zaslow(3) * expand(1, 1, 3) * Fraction(-2)
        assert rep.F.coeffs == closed.coeffs

    def test_n_values_are_python_ints(self):
        rep = generating_function(z0_spec(), 2)
        assert all(isinstance(rep.n(d), int) for d in range(3))

    def test_zero_prefactor_for_non_calabi_yau(self):
        spec = K3FibrationSpec(
            name="toy",
            base_genus=0,
            calabi_yau=False,
            iso_trivial=False,
            fiber_lattice=build("H"),
            fibers=(),
        )
        rep = generating_function(spec, 4)
        assert rep.prefactor == 0
        assert all(c == 0 for c in rep.F.coeffs)

    def test_zero_prefactor_for_torus_base(self):
        spec = K3FibrationSpec(
            name="torus-base",
            base_genus=1,
            calabi_yau=True,
            iso_trivial=False,
            fiber_lattice=build("H"),
            fibers=(),
        )
        rep = generating_function(spec, 2)
        assert rep.prefactor == 0
        assert all(c == 0 for c in rep.F.coeffs)

    def test_invalid_spec_rejected_with_diagnostics(self):
        spec = K3FibrationSpec(
            name="bad",
            base_genus=0,
            calabi_yau=True,
            iso_trivial=False,
            fiber_lattice=dsum(build("H"), build("H")),
            fibers=(),
        )
        with pytest.raises(ValidationFailure) as exc:
            generating_function(spec, 2)
        assert any(d.code == "signature" for d in exc.value.diagnostics)

    def test_non_unimodular_spec_rejected(self):
        spec = K3FibrationSpec(
            name="y0",
            base_genus=0,
            euler_total=-62,
            calabi_yau=True,
            iso_trivial=False,
            fiber_lattice=rank1(4),
            fibers=(SingularFiberSpec(count=110, kind="ADE", euler=23),),
        )
        with pytest.raises(NonUnimodular):
            generating_function(spec, 2)

    def test_depends_only_on_lattice_and_prefactor(self):
        other = K3FibrationSpec(
            name="z0-sibling",
            base_genus=0,
            calabi_yau=True,
            iso_trivial=False,
            fiber_lattice=dsum(build("-E8"), build("H")),
            fibers=(SingularFiberSpec(count=3, kind="ADE"),),
        )
        a = generating_function(z0_spec(), 4)
        b = generating_function(other, 4)
        assert a.F.coeffs == b.F.coeffs
        assert a.weight == b.weight

    def test_underdetermined_theta_warns_and_falls_back(self):
        spec = K3FibrationSpec(
            name="full-rank",
            base_genus=0,
            calabi_yau=True,
            iso_trivial=False,
            fiber_lattice=build("H + 2(-E8)"),
            fibers=(),
        )
        with pytest.warns(UnderdeterminedThetaWarning):
            rep = generating_function(spec, 3)
        assert rep.theta_label == "1"
        assert "theta" in " ".join(rep.warnings).lower()
        closed = yau_zaslow(3) * Fraction(-2)
        assert rep.F.coeffs == closed.coeffs

    def test_all_coefficients_integral(self):
        for spec in (z0_spec(), w0_spec()):
            rep = generating_function(spec, 8)
            assert all(c.denominator == 1 for c in rep.F.coeffs)

    def test_constant_coefficient_equals_prefactor(self):
        for spec in (z0_spec(), w0_spec()):
            rep = generating_function(spec, 1)
            assert rep.F[0] == rep.prefactor

    def test_report_is_frozen(self):
        rep = generating_function(z0_spec(), 1)
        with pytest.raises(AttributeError):
            rep.weight = 7


# ---------------------------------------------------------------------------
# genus_series: genus 0 definitional, genus 1 experimental.
# ---------------------------------------------------------------------------

class TestGenusSeries:
    def test_genus_zero_is_definitional(self):
        assert (
            genus_series(z0_spec(), 0, 4).coeffs
            == generating_function(z0_spec(), 4).F.coeffs
        )

    def test_genus_one_reference_value(self):
        with pytest.warns(ExperimentalWarning):
            series = genus_series(z0_spec(), 1, 1)
        assert series.coeffs == (-2, 1008)

    def test_genus_one_is_quasi_modular_multiple(self):
        with pytest.warns(ExperimentalWarning):
            series = genus_series(z0_spec(), 1, 5)
        base = generating_function(z0_spec(), 5).F
        assert series.coeffs == (base * eisenstein(2, 5)).coeffs

    def test_higher_genus_unsupported(self):
        with pytest.raises(UnsupportedGenus):
            genus_series(z0_spec(), 2, 3)
        with pytest.raises(UnsupportedGenus):
            genus_series(z0_spec(), -1, 3)


# ---------------------------------------------------------------------------
# negative_definite_reference: enumerable-theta cross-check of the plumbing.
# ---------------------------------------------------------------------------

class TestNegativeDefiniteReference:
    def test_e8_mock_reproduces_weight_4_factor(self):
        series = negative_definite_reference(neg(e8()), 4)
        closed = yau_zaslow(4) * eisenstein(4, 4) * Fraction(-2)
        assert series.coeffs == closed.coeffs

    def test_theta_factor_is_the_enumeration(self):
        series = negative_definite_reference(neg(e8()), 3)
        assert theta_definite(neg(e8()), 3).coeffs == eisenstein(4, 3).coeffs
        direct = yau_zaslow(3) * theta_definite(neg(e8()), 3) * Fraction(-2)
        assert series.coeffs == direct.coeffs

    def test_rank_zero_mock(self):
        series = negative_definite_reference(Lattice((), label="0"), 3)
        closed = yau_zaslow(3) * Fraction(-2)
        assert series.coeffs == closed.coeffs

    def test_two_e8_blocks_give_weight_8_square(self):
        mock = dsum(neg(e8()), neg(e8()))
        assert theta_definite(mock, 3).coeffs == expand(2, 0, 3).coeffs
        series = negative_definite_reference(mock, 3)
        closed = yau_zaslow(3) * expand(2, 0, 3) * Fraction(-2)
        assert series.coeffs == closed.coeffs

    def test_custom_prefactor(self):
        series = negative_definite_reference(neg(e8()), 2, prefactor=1)
        closed = yau_zaslow(2) * eisenstein(4, 2)
        assert series.coeffs == closed.coeffs

    def test_indefinite_rejected(self):
        with pytest.raises(IndefiniteLattice):
            negative_definite_reference(build("H"), 2)

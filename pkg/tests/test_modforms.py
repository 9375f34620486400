"""Unit tests for the level-1 modular-forms layer (monomial basis in the
weight-4 and weight-6 Eisenstein generators)."""

from fractions import Fraction

import pytest

from k3count.exactq import QSeries, delta, eisenstein, yau_zaslow
from k3count.modforms import (
    NotInSpace,
    OddWeightWarning,
    Underdetermined,
    expand,
    express_in_basis,
    pin_normalized,
    space,
)

from oracles import dim_level_one_forms_oracle


# ---------------------------------------------------------------------------
# Weight spaces.
# ---------------------------------------------------------------------------

def test_space_enumerations():
    assert space(10).monomials == ((1, 1),)
    assert space(0).monomials == ((0, 0),)
    assert space(12).monomials == ((3, 0), (0, 2))
    assert space(2).monomials == ()
    assert space(14).monomials == ((2, 1),)


def test_space_one_dimensional_weights():
    for k in (0, 4, 6, 8, 10, 14):
        assert space(k).dimension == 1
    assert space(2).dimension == 0


def test_space_odd_weight_warns_and_is_empty():
    with pytest.warns(OddWeightWarning):
        sp = space(7)
    assert sp.dimension == 0


def test_space_rejects_negative_weight():
    with pytest.raises(ValueError):
        space(-4)


def test_dimension_table_matches_closed_formula():
    for k in range(0, 61, 2):
        assert space(k).dimension == dim_level_one_forms_oracle(k)


# ---------------------------------------------------------------------------
# Monomial expansion.
# ---------------------------------------------------------------------------

def test_expand_basics():
    assert expand(0, 0, 3) == QSeries([1, 0, 0, 0])
    assert expand(1, 0, 1).coeffs == (1, 240)
    assert expand(1, 1, 1).coeffs == (1, -264)


def test_expand_ring_closure():
    n = 8
    for (a1, b1), (a2, b2) in [((1, 0), (0, 1)), ((2, 1), (1, 0)), ((0, 2), (3, 0))]:
        assert expand(a1, b1, n) * expand(a2, b2, n) == expand(a1 + a2, b1 + b2, n)


# ---------------------------------------------------------------------------
# The normalization pin.
# ---------------------------------------------------------------------------

def test_pin_weight_6_is_the_weight6_eisenstein():
    assert pin_normalized(6, 1).coeffs == (1, -504)
    assert pin_normalized(6, 5) == eisenstein(6, 5)


def test_pin_weight_10_is_the_product():
    assert pin_normalized(10, 1).coeffs == (1, -264)
    assert pin_normalized(10, 5) == eisenstein(4, 5) * eisenstein(6, 5)


def test_pin_constant_term_is_one():
    for k in (0, 4, 6, 8, 10, 14):
        assert pin_normalized(k, 3)[0] == 1


def test_pin_fails_off_the_one_dimensional_range():
    with pytest.raises(Underdetermined):
        pin_normalized(12, 3)
    with pytest.raises(Underdetermined):
        pin_normalized(2, 3)


# ---------------------------------------------------------------------------
# Expressing series in the monomial basis.
# ---------------------------------------------------------------------------

def test_express_tautology():
    e4sq = expand(2, 0, 6)
    assert express_in_basis(e4sq, 8) == [Fraction(1)]


def test_express_discriminant():
    # the discriminant cusp form = (E4^3 - E6^2)/1728
    coeffs = express_in_basis(delta(10), 12)
    assert coeffs == [Fraction(1, 1728), Fraction(-1, 1728)]


def test_express_indicator_vectors():
    n = 10
    for a, b in [(3, 0), (0, 2)]:
        coeffs = express_in_basis(expand(a, b, n), 12)
        expected = [Fraction(1) if mon == (a, b) else Fraction(0) for mon in space(12).monomials]
        assert coeffs == expected


def test_express_rejects_quasi_modular_weight2():
    with pytest.raises(NotInSpace):
        express_in_basis(eisenstein(2, 5), 2)


def test_express_rejects_non_forms_by_residual():
    # the rational-curve series is not modular of weight 12
    with pytest.raises(NotInSpace):
        express_in_basis(yau_zaslow(10), 12)


def test_express_needs_enough_coefficients():
    with pytest.raises(ValueError):
        express_in_basis(QSeries([1]), 12)


def test_discriminant_identity_through_high_order():
    n = 14
    e4, e6 = eisenstein(4, n), eisenstein(6, n)
    lhs = delta(n) * 1728
    rhs = e4 ** 3 - e6 ** 2
    assert lhs == rhs

"""Exception and warning hierarchy shared across the package.

All library-raised errors derive from :class:`K3CountError` so callers can
catch everything from this package with one except clause.  Conditions that
are recoverable by contract (primitive-basis caveats, pinned-factor
fallbacks, experimental outputs) are Python warnings instead.
"""

from __future__ import annotations


class K3CountError(Exception):
    """Base class for every error raised by this package."""


# --- q-series layer ---------------------------------------------------------

class TruncationExceeded(K3CountError, IndexError):
    """A coefficient beyond the series truncation order was requested."""


class ZeroConstantTerm(K3CountError, ValueError):
    """Inversion (or logarithm) needs a series with a unit constant term."""


class NonzeroConstantTerm(K3CountError, ValueError):
    """Exponentiation needs a series with zero constant term."""


class UnsupportedWeight(K3CountError, ValueError):
    """Eisenstein expansions are provided for weights 2, 4 and 6 only."""


# --- lattice layer ----------------------------------------------------------

class DegenerateForm(K3CountError, ValueError):
    """The operation requires a nondegenerate symmetric form."""


class NoSuchLattice(K3CountError, ValueError):
    """No even unimodular lattice exists with the requested signature."""


class RankDeficient(K3CountError, ValueError):
    """The supplied basis columns are linearly dependent."""


class IndefiniteLattice(K3CountError, ValueError):
    """Vector enumeration requires a definite form."""


class OddLattice(K3CountError, ValueError):
    """Theta expansion in integer powers of q requires an even lattice."""


class NotPrimitiveWarning(UserWarning):
    """The supplied sublattice basis does not extend to an ambient basis."""


# --- modular forms layer ----------------------------------------------------

class OddWeightWarning(UserWarning):
    """Odd weights carry no level-1 forms; an empty space is returned."""


class Underdetermined(K3CountError, ValueError):
    """The weight space is not one-dimensional; a pin needs more data."""


class NotInSpace(K3CountError, ValueError):
    """The series is not the expansion of a form of the stated weight."""


# --- characteristic-class layer ---------------------------------------------

class OddSelfIntersection(K3CountError, ValueError):
    """Self-intersections of fiberwise classes are even."""


# --- fibration layer --------------------------------------------------------

class NonIntegralCount(K3CountError, ValueError):
    """Euler bookkeeping solved to a non-integral or negative fiber count."""


class NotCalabiYau(K3CountError, ValueError):
    """The operation assumes a Calabi-Yau total space."""


class DefectMismatch(K3CountError, ValueError):
    """An iso-trivial family must have vanishing symplectic-volume degree."""


class GenusOutOfRange(K3CountError, ValueError):
    """The genus must satisfy 0 <= g <= C^2/2 + 1."""


class ValidationFailure(K3CountError, ValueError):
    """A fibration description failed validation; carries the diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        lines = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"fibration description invalid: {lines}")


# --- counting layer ---------------------------------------------------------

class NonUnimodular(K3CountError, ValueError):
    """The counting pipeline requires a unimodular fiberwise lattice."""


class UnsupportedGenus(K3CountError, ValueError):
    """Higher-genus universal factors are not implemented."""


class PipelineInvariantError(K3CountError, RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class UnderdeterminedThetaWarning(UserWarning):
    """The pinned factor fell back to the constant series 1."""


class ExperimentalWarning(UserWarning):
    """The result is produced by an experimentally normalized formula."""


# --- command-line layer ------------------------------------------------------

class ConfigError(K3CountError, ValueError):
    """A fibration config file is malformed, incomplete, or has unknown keys."""

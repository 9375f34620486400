"""Declarative model of a tamed K3-fibered threefold over a curve.

A fibration is described by immutable data: the base genus, flags
(Calabi-Yau, isometrically trivial moduli map), the fiberwise lattice
(the monodromy-invariant part of the second cohomology of a fiber,
which must have signature (1, rank-1) and rank at most 20), and a list
of singular-fiber records.

The numerical identities implemented here:

* Euler bookkeeping — with generic fiber Euler number 24, a total
  Euler number chi and identical singular fibers of Euler number e
  force the count (24*(2-2g) - chi) / (24 - e);
* Weil-Petersson degree — for Calabi-Yau fibrations the degree of the
  moduli-space volume form plus the sum of local defects equals the
  base degree c1(B)[B] = 2-2g; an isometrically trivial family has
  degree 0 with all the weight carried by defects;
* expected dimensions of nodal-curve families: a class of square C^2
  and genus g moves in a family of dimension C^2/2 + 1 with
  l = C^2/2 + 1 - g nodes, and the associated obstruction class sits
  in grade C^2 - 3g + 3 = 2l + 1 - g;
* the admissible-square enumeration for two-factor splittings,
  Brieskorn Milnor numbers, and the adjunction genus.

Defects are input data: they arise from monodromy eigenvalues on
holomorphic 2-forms, whose computation needs period geometry beyond
this library.  ADE (rational double point) fibers have defect 0; a
quasi-homogeneous fiber may carry an explicit rational defect or a
monodromy order m, in which case the defect defaults to 1/m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import (
    DefectMismatch,
    GenusOutOfRange,
    NonIntegralCount,
    NotCalabiYau,
)
from .lattice import Lattice, invariants

__all__ = [
    "SingularFiberSpec",
    "K3FibrationSpec",
    "DimensionReport",
    "Diagnostic",
    "validate",
    "solve_singular_fiber_count",
    "euler_total_from_fibers",
    "wp_degree",
    "defect_sum",
    "expected_dimensions",
    "admissible_y_squares",
    "milnor_brieskorn",
    "adjunction_genus",
]

GENERIC_FIBER_EULER = 24  # Euler number of a smooth K3 surface
ADE_FIBER_EULER = 23  # one ordinary double point kills one vanishing cycle
MAX_FIBER_LATTICE_RANK = 20

_KINDS = ("ADE", "quasi_homogeneous")


@dataclass(frozen=True)
class SingularFiberSpec:
    """One orbit of identical singular fibers.

    ``defect`` is the fractional moduli-volume absorbed at each such
    fiber, a rational in [0, 1).  Resolution rules: ADE fibers have
    defect 0 and Euler number defaulting to 23; other kinds use an
    explicit defect if given, else 1/monodromy_order, and have no
    default Euler number.
    """

    count: int
    kind: str
    euler: Optional[int] = None
    monodromy_order: Optional[int] = None
    defect: Optional[Fraction] = None
    exponents: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(
                f"unknown singular-fiber kind {self.kind!r}; expected one of {_KINDS}"
            )
        if not isinstance(self.count, int) or self.count < 1:
            raise ValueError(f"fiber count must be a positive integer, got {self.count!r}")
        if self.monodromy_order is not None and self.monodromy_order < 1:
            raise ValueError("monodromy_order must be a positive integer")
        if self.defect is not None:
            object.__setattr__(self, "defect", Fraction(self.defect))
        if self.exponents is not None:
            object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))

    @property
    def resolved_defect(self) -> Fraction:
        if self.kind == "ADE":
            return Fraction(0)
        if self.defect is not None:
            return self.defect
        if self.monodromy_order is not None:
            return Fraction(1, self.monodromy_order)
        raise ValueError(
            "defect is underdetermined: give either defect or monodromy_order"
        )

    @property
    def resolved_euler(self) -> Optional[int]:
        if self.euler is not None:
            return self.euler
        if self.kind == "ADE":
            return ADE_FIBER_EULER
        return None


@dataclass(frozen=True)
class K3FibrationSpec:
    """A tamed K3 fibration over a curve of genus ``base_genus``."""

    name: str
    base_genus: int
    calabi_yau: bool
    iso_trivial: bool
    fiber_lattice: Lattice
    fibers: Tuple[SingularFiberSpec, ...]
    euler_total: Optional[int] = None
    b2: Optional[int] = None

    def __post_init__(self):
        if self.base_genus < 0:
            raise ValueError("base_genus must be a non-negative integer")
        object.__setattr__(self, "fibers", tuple(self.fibers))

    @property
    def base_degree(self) -> int:
        """c1(B)[B] = 2 - 2g for the base curve."""
        return 2 - 2 * self.base_genus


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding; ``code`` is a stable short tag."""

    severity: str  # "error" | "warning"
    code: str
    message: str


@dataclass(frozen=True)
class DimensionReport:
    """Dimension ledger of the genus-g nodal-curve problem in a class of
    even square c_squared inside the K3 fibers."""

    c_squared: int
    genus: int
    nodes: int
    family_dim: int
    eta_grade: int
    coexistence_dim: Optional[int] = None


# ---------------------------------------------------------------------------
# Validation.
# ---------------------------------------------------------------------------

def validate(spec: K3FibrationSpec) -> List[Diagnostic]:
    """Check the fibration data against the model's invariants.

    Returns a list of diagnostics (empty = clean) and never raises or
    mutates.  Checks: fiberwise lattice signature (1, rank-1), rank at
    most 20, evenness; defect range [0, 1) with ADE pinned at 0 and a
    determinate defect source for the rest; exponents at least 2; and,
    when a total Euler number is declared, consistency with the fiber
    list.
    """
    diags: List[Diagnostic] = []

    inv = invariants(spec.fiber_lattice)
    if inv.rank > MAX_FIBER_LATTICE_RANK:
        diags.append(
            Diagnostic(
                "error",
                "b2 bound",
                f"fiberwise lattice rank {inv.rank} exceeds the bound "
                f"{MAX_FIBER_LATTICE_RANK}",
            )
        )
    if inv.signature != (1, inv.rank - 1) or inv.is_degenerate:
        diags.append(
            Diagnostic(
                "error",
                "signature",
                f"fiberwise lattice must have signature (1, rank-1); got "
                f"{inv.signature} at rank {inv.rank}",
            )
        )
    if not inv.is_even:
        diags.append(
            Diagnostic(
                "error",
                "even",
                "fiberwise lattice must be even (it embeds in the K3 lattice)",
            )
        )

    for i, fib in enumerate(spec.fibers):
        where = f"fibers[{i}]"
        if fib.kind == "ADE" and fib.defect not in (None, 0):
            diags.append(
                Diagnostic(
                    "error",
                    "ADE forces defect 0",
                    f"{where}: rational double points have defect 0, got {fib.defect}",
                )
            )
        try:
            delta = fib.resolved_defect
        except ValueError:
            diags.append(
                Diagnostic(
                    "error",
                    "defect source",
                    f"{where}: give either defect or monodromy_order",
                )
            )
        else:
            if not 0 <= delta < 1:
                diags.append(
                    Diagnostic(
                        "error",
                        "defect range",
                        f"{where}: defect {delta} is outside [0, 1)",
                    )
                )
        if fib.exponents is not None and any(a < 2 for a in fib.exponents):
            diags.append(
                Diagnostic(
                    "error",
                    "exponents",
                    f"{where}: quasi-homogeneous exponents must all be >= 2, "
                    f"got {fib.exponents}",
                )
            )

    if spec.euler_total is not None:
        eulers = [fib.resolved_euler for fib in spec.fibers]
        if any(e is None for e in eulers):
            diags.append(
                Diagnostic(
                    "warning",
                    "euler unchecked",
                    "euler_total declared but some fibers have no Euler number; "
                    "consistency not checked",
                )
            )
        else:
            expected = euler_total_from_fibers(spec.base_genus, spec.fibers)
            if expected != spec.euler_total:
                diags.append(
                    Diagnostic(
                        "error",
                        "euler consistency",
                        f"declared euler_total {spec.euler_total} but the fiber "
                        f"list yields {expected}",
                    )
                )

    return diags


# ---------------------------------------------------------------------------
# Euler bookkeeping.
# ---------------------------------------------------------------------------

def solve_singular_fiber_count(
    chi_total: int, base_genus: int, sing_fiber_euler: int
) -> int:
    """Number of identical singular fibers forced by the total Euler number.

    chi = 24*(2-2g) + count*(e - 24), solved for count.  The generic
    fiber value e = 24 carries no information and is refused.
    """
    if sing_fiber_euler == GENERIC_FIBER_EULER:
        raise ValueError(
            "singular-fiber Euler number 24 equals the generic fiber; "
            "the count is not determined"
        )
    numerator = GENERIC_FIBER_EULER * (2 - 2 * base_genus) - chi_total
    denominator = GENERIC_FIBER_EULER - sing_fiber_euler
    count = Fraction(numerator, denominator)
    if count.denominator != 1 or count < 0:
        raise NonIntegralCount(
            f"chi={chi_total}, base genus {base_genus}, fiber Euler number "
            f"{sing_fiber_euler} give count {count}, not a non-negative integer"
        )
    return int(count)


def euler_total_from_fibers(
    base_genus: int, fibers: Sequence[SingularFiberSpec]
) -> int:
    """Inverse of the count solver: total Euler number from the fiber list.

    Every fiber must have a resolvable Euler number.
    """
    total = GENERIC_FIBER_EULER * (2 - 2 * base_genus)
    for fib in fibers:
        e = fib.resolved_euler
        if e is None:
            raise ValueError(
                "cannot total Euler numbers: a fiber has no Euler number"
            )
        total += fib.count * (e - GENERIC_FIBER_EULER)
    return total


# ---------------------------------------------------------------------------
# Weil-Petersson degree and defects.
# ---------------------------------------------------------------------------

def defect_sum(spec: K3FibrationSpec) -> Fraction:
    """Total local defect, sum over fibers of count * defect."""
    return sum((fib.count * fib.resolved_defect for fib in spec.fibers), Fraction(0))


def wp_degree(spec: K3FibrationSpec) -> Fraction:
    """Degree of the moduli volume form on the base: c1(B)[B] minus defects.

    Requires the Calabi-Yau flag (the identity needs a trivial canonical
    class).  An isometrically trivial family maps to a point in moduli,
    so its degree must come out exactly 0 with the whole base degree
    carried by the fractional defects; any other value is an
    inconsistent spec.
    """
    if not spec.calabi_yau:
        raise NotCalabiYau(
            f"spec {spec.name!r}: the degree/defect identity assumes a "
            "Calabi-Yau total space"
        )
    degree = Fraction(spec.base_degree) - defect_sum(spec)
    if spec.iso_trivial and degree != 0:
        raise DefectMismatch(
            f"spec {spec.name!r} is isometrically trivial but the defects sum "
            f"to {defect_sum(spec)}, leaving degree {degree} instead of 0"
        )
    return degree


# ---------------------------------------------------------------------------
# Dimension formulas.
# ---------------------------------------------------------------------------

def expected_dimensions(
    c_squared: int,
    genus: int,
    exceptional_squares: Optional[Sequence[int]] = None,
) -> DimensionReport:
    """Dimension ledger for genus-g curves in a fiberwise class of square C^2.

    nodes l = C^2/2 + 1 - g, family dimension C^2/2 + 1, obstruction
    grade C^2 - 3g + 3 (= 2l + 1 - g).  When a list of exceptional-class
    squares is supplied, also reports the co-existence dimension
    1 + sum(e^2 / 2) of the locus where those classes stay effective
    (the base contributes 1, and canonical terms vanish fiberwise).
    """
    if c_squared % 2 != 0:
        raise ValueError(f"fiberwise classes have even square, got {c_squared}")
    nodes = c_squared // 2 + 1 - genus
    if genus < 0 or nodes < 0:
        raise GenusOutOfRange(
            f"genus {genus} outside [0, {c_squared // 2 + 1}] for square {c_squared}"
        )
    coexistence = None
    if exceptional_squares is not None:
        if any(e % 2 != 0 for e in exceptional_squares):
            raise ValueError("exceptional-class squares must be even")
        coexistence = 1 + sum(e // 2 for e in exceptional_squares)
    return DimensionReport(
        c_squared=c_squared,
        genus=genus,
        nodes=nodes,
        family_dim=c_squared // 2 + 1,
        eta_grade=c_squared - 3 * genus + 3,
        coexistence_dim=coexistence,
    )


def admissible_y_squares(x_squared: int) -> List[int]:
    """Even squares y^2 with -2 - x^2 <= y^2 <= -2.

    These are the second-factor squares that can contribute to a
    two-factor splitting of an effective class of square x^2; the y = 0
    term is accounted separately as the theta constant term.  Empty when
    x^2 < 0.
    """
    if x_squared % 2 != 0:
        raise ValueError(f"fiberwise classes have even square, got {x_squared}")
    return list(range(-2 - x_squared, -1, 2))


def milnor_brieskorn(exponents: Sequence[int]) -> int:
    """Milnor number of x1^a1 + ... + xn^an: the product of (ai - 1)."""
    exps = tuple(int(a) for a in exponents)
    if any(a < 2 for a in exps):
        raise ValueError(f"exponents must all be >= 2, got {exps}")
    out = 1
    for a in exps:
        out *= a - 1
    return out


def adjunction_genus(c_squared: int) -> int:
    """Genus of a smooth fiberwise curve of even square C^2: C^2/2 + 1."""
    if c_squared % 2 != 0:
        raise ValueError(f"fiberwise classes have even square, got {c_squared}")
    if c_squared < -2:
        raise ValueError(
            f"no reduced irreducible curve class has square {c_squared} < -2"
        )
    return c_squared // 2 + 1

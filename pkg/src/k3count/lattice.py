"""Integer quadratic forms: constructors, invariants, classification,
orthogonal complements, and theta series by exhaustive enumeration.

A lattice is a square symmetric Gram matrix over arbitrary-precision
integers.  Everything here is exact:

* invariants use a rational symmetric congruence diagonalization for the
  signature and the fraction-free Bareiss algorithm for the determinant;
* indefinite even unimodular forms are classified by signature alone into
  a * H + b * (+/-E8) (the rank-two hyperbolic plane H and the unique
  even unimodular definite rank-8 form);
* orthogonal complements inside a nondegenerate ambient lattice are
  computed from the integer kernel of the pairing matrix, obtained by
  unimodular column reduction, so the resulting basis is automatically
  saturated;
* theta series of definite even lattices are computed by exhaustive
  vector enumeration with completing-the-square bounds, all in rational
  arithmetic.  Indefinite forms are refused at this layer — their
  regularized theta factor is produced by the modular pin in
  :mod:`k3count.counting`, never by summation.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Optional, Sequence

from .errors import (
    DegenerateForm,
    IndefiniteLattice,
    NoSuchLattice,
    NotPrimitiveWarning,
    OddLattice,
    PipelineInvariantError,
    RankDeficient,
)
from .exactq import QSeries

__all__ = [
    "Lattice",
    "LatticeInvariants",
    "HyperbolicDecomposition",
    "hyperbolic_plane",
    "e8",
    "rank1",
    "neg",
    "dsum",
    "k3_lattice",
    "build",
    "invariants",
    "classify_indefinite_even_unimodular",
    "coordinate_embedding",
    "complement_in",
    "theta_definite",
    "count_vectors_of_norm",
    # re-exported error types for convenience
    "DegenerateForm",
    "IndefiniteLattice",
    "NoSuchLattice",
    "NotPrimitiveWarning",
    "OddLattice",
    "RankDeficient",
]


@dataclass(frozen=True)
class Lattice:
    """A square symmetric integer Gram matrix with an optional display label."""

    gram: tuple
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        n = len(gram)
        for row in gram:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __repr__(self) -> str:
        name = self.label or f"rank-{self.rank} lattice"
        return f"Lattice({name})"


@dataclass(frozen=True)
class LatticeInvariants:
    """Derived data of a lattice: rank, determinant, inertia signature,
    evenness, unimodularity, and a degeneracy flag (reported, not fatal)."""

    rank: int
    determinant: int
    signature: tuple  # (positive inertia count, negative inertia count)
    is_even: bool
    is_unimodular: bool
    is_degenerate: bool

    def describe(self) -> str:
        parity = "even" if self.is_even else "odd"
        uni = "unimodular" if self.is_unimodular else "not unimodular"
        p, n = self.signature
        text = f"rank {self.rank}, signature ({p},{n}), det {self.determinant}, {parity}, {uni}"
        if self.is_degenerate:
            text += ", degenerate"
        return text


# ---------------------------------------------------------------------------
# Constructors.
# ---------------------------------------------------------------------------

def hyperbolic_plane() -> Lattice:
    """The even rank-2 form [[0,1],[1,0]] of determinant -1."""
    return Lattice(((0, 1), (1, 0)), label="H")


# Simply-laced rank-8 diagram: chain 1-3-4-5-6-7-8 with node 2 hanging off 4.
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def e8() -> Lattice:
    """The unique even unimodular positive-definite rank-8 lattice,
    presented by its simply-laced Cartan matrix (240 vectors of norm 2)."""
    gram = [[0] * 8 for _ in range(8)]
    for i in range(8):
        gram[i][i] = 2
    for a, b in _E8_EDGES:
        gram[a - 1][b - 1] = gram[b - 1][a - 1] = -1
    return Lattice(tuple(tuple(row) for row in gram), label="E8")


def rank1(d: int) -> Lattice:
    """The rank-1 lattice generated by a vector of self-intersection d."""
    return Lattice(((int(d),),), label=f"rank1({int(d)})")


def neg(lat: Lattice) -> Lattice:
    """Sign flip: the same module with the negated pairing."""
    gram = tuple(tuple(-x for x in row) for row in lat.gram)
    label = f"-{lat.label}" if lat.label and " " not in lat.label else None
    return Lattice(gram, label=label)


def dsum(*lattices: Lattice) -> Lattice:
    """Orthogonal direct sum (block-diagonal Gram matrix)."""
    total = sum(l.rank for l in lattices)
    gram = [[0] * total for _ in range(total)]
    offset = 0
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                gram[offset + i][offset + j] = lat.gram[i][j]
        offset += lat.rank
    labels = [l.label for l in lattices]
    label = " + ".join(labels) if all(labels) and labels else None
    return Lattice(tuple(tuple(row) for row in gram), label=label)


K3_RANK = 22  # rank of the second-cohomology lattice of a K3 surface


def k3_lattice() -> Lattice:
    """The rank-22 even unimodular lattice 3H + 2(-E8) of signature (3,19)."""
    h = hyperbolic_plane()
    me8 = neg(e8())
    return dsum(h, h, h, me8, me8)


def build(expr: str) -> Lattice:
    """Build a lattice from a '+'-joined token expression.

    Tokens: ``H``, ``E8``, ``-E8``, ``rank1(d)`` with integer d, each
    optionally repeated as ``3H`` or ``2(-E8)`` (the forms ``describe()``
    emits).  Example: ``"H + -E8"``.  This grammar is also the lattice
    syntax of the CLI and of the fibration config files.
    """

    def single(token: str) -> Lattice:
        if token == "H":
            return hyperbolic_plane()
        if token == "E8":
            return e8()
        if token == "-E8":
            return neg(e8())
        if token.startswith("rank1(") and token.endswith(")"):
            inner = token[len("rank1("):-1].strip()
            try:
                return rank1(int(inner))
            except ValueError:
                raise ValueError(f"rank1(...) needs an integer, got {inner!r}") from None
        raise ValueError(
            f"unknown lattice token {token!r}; expected H, E8, -E8, or rank1(d), "
            "optionally repeated as in 3H or 2(-E8)"
        )

    parts = []
    for raw in expr.split("+"):
        token = raw.strip()
        repeat_full = re.fullmatch(r"(\d+)\((.+)\)", token)
        repeat_h = re.fullmatch(r"(\d+)H", token)
        if repeat_h:
            count, inner = int(repeat_h.group(1)), "H"
        elif repeat_full and not token.startswith("rank1("):
            count, inner = int(repeat_full.group(1)), repeat_full.group(2).strip()
        else:
            count, inner = 1, token
        if count < 1:
            raise ValueError(f"token multiplicity must be positive in {token!r}")
        parts.extend(single(inner) for _ in range(count))
    return parts[0] if len(parts) == 1 else dsum(*parts)


# ---------------------------------------------------------------------------
# Exact linear algebra helpers.
# ---------------------------------------------------------------------------

def _det_bareiss(gram: Sequence[Sequence[int]]) -> int:
    """Exact determinant by the fraction-free Bareiss elimination."""
    n = len(gram)
    if n == 0:
        return 1
    a = [list(row) for row in gram]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _congruence_diagonal(gram: Sequence[Sequence[int]]) -> list:
    """Diagonal of a rational congruence diagonalization S^T G S.

    Sylvester's law of inertia makes the sign counts of the returned
    entries basis-independent.  Zero entries witness degeneracy.
    """
    n = len(gram)
    m = [[Fraction(x) for x in row] for row in gram]
    diag = []
    for i in range(n):
        if m[i][i] == 0:
            j = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if j is not None:
                # swap coordinates i and j
                m[i], m[j] = m[j], m[i]
                for row in m:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if j is not None:
                    # all remaining diagonal entries vanish; adding coordinate j
                    # onto coordinate i makes the pivot 2*m[i][j] != 0
                    for k in range(n):
                        m[i][k] += m[j][k]
                    for row in m:
                        row[i] += row[j]
        pivot = m[i][i]
        if pivot == 0:
            diag.append(Fraction(0))
            continue
        for j in range(i + 1, n):
            factor = m[j][i] / pivot
            if factor:
                for k in range(n):
                    m[j][k] -= factor * m[i][k]
        for j in range(i + 1, n):
            factor = m[i][j] / pivot
            if factor:
                for row in m:
                    row[j] -= factor * row[i]
        diag.append(pivot)
    return diag


def _column_reduce_with_transform(a_rows: list, n: int):
    """Unimodular column reduction A -> [echelon | 0].

    Applies integer column operations (shared with an identity matrix V) so
    that the transformed A has its nonzero columns first.  Returns
    (rank, V) where the last n - rank columns of V span the saturated
    integer kernel of A.
    """
    a = [list(row) for row in a_rows]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    k = len(a)

    def col_sub(j, i, t):  # column_j -= t * column_i
        for row in a:
            row[j] -= t * row[i]
        for row in v:
            row[j] -= t * row[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    c = 0
    for r in range(k):
        while True:
            nz = [j for j in range(c, n) if a[r][j] != 0]
            if not nz:
                break
            if len(nz) == 1:
                if nz[0] != c:
                    col_swap(nz[0], c)
                c += 1
                break
            j_min = min(nz, key=lambda j: abs(a[r][j]))
            for j in nz:
                if j != j_min:
                    col_sub(j, j_min, a[r][j] // a[r][j_min])
    return c, v


def _unimodular_diagonal(matrix: list) -> list:
    """Diagonal entries of a unimodular-equivalent diagonal form of `matrix`.

    Row and column operations only (determinant-1 transforms), so the
    absolute values of the entries are the elementary divisors up to
    reordering; the sublattice spanned by the columns is primitive iff all
    returned entries are +-1 (and there are as many as columns).
    """
    m = [list(row) for row in matrix]
    rows, cols = len(m), len(m[0]) if matrix else 0
    diag = []
    for t in range(min(rows, cols)):
        # locate a nonzero pivot in the remaining block
        pivot = next(
            ((i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j] != 0),
            None,
        )
        if pivot is None:
            break
        i, j = pivot
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        while True:
            # shrink the pivot by Euclid until it divides its row and column
            moved = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    for c in range(cols):
                        m[i][c] -= q * m[t][c]
                    if m[i][t] != 0:
                        m[t], m[i] = m[i], m[t]
                        moved = True
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j] != 0:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        moved = True
            if not moved:
                break
        diag.append(m[t][t])
    return diag


# ---------------------------------------------------------------------------
# Invariants and classification.
# ---------------------------------------------------------------------------

def invariants(lat: Lattice) -> LatticeInvariants:
    """Exact rank, determinant, signature, evenness and unimodularity."""
    gram = lat.gram
    n = lat.rank
    det = _det_bareiss(gram)
    diag = _congruence_diagonal(gram)
    positive = sum(1 for d in diag if d > 0)
    negative = sum(1 for d in diag if d < 0)
    zeros = n - positive - negative
    if (zeros > 0) != (det == 0):
        raise PipelineInvariantError(
            "determinant and diagonalization disagree on degeneracy"
        )
    return LatticeInvariants(
        rank=n,
        determinant=det,
        signature=(positive, negative),
        is_even=all(gram[i][i] % 2 == 0 for i in range(n)),
        is_unimodular=abs(det) == 1,
        is_degenerate=zeros > 0,
    )


@dataclass(frozen=True)
class HyperbolicDecomposition:
    """a copies of H plus b copies of (+/-)E8, with the rebuilt lattice."""

    hyperbolic_count: int
    e8_count: int
    e8_sign: int  # +1 / -1, or 0 when e8_count == 0
    lattice: Lattice

    def describe(self) -> str:
        parts = []
        if self.hyperbolic_count:
            a = self.hyperbolic_count
            parts.append("H" if a == 1 else f"{a}H")
        if self.e8_count:
            token = "E8" if self.e8_sign > 0 else "-E8"
            parts.append(token if self.e8_count == 1 else f"{self.e8_count}({token})")
        return " + ".join(parts) if parts else "0"


def classify_indefinite_even_unimodular(signature) -> HyperbolicDecomposition:
    """Decompose the indefinite even unimodular form of a given signature.

    For signature (p, q) with p, q >= 1 and p - q divisible by 8, the form
    is min(p, q) copies of H plus |p - q|/8 copies of E8 with the sign of
    p - q.  Any other signature admits no such lattice.
    """
    p, q = signature
    if p < 1 or q < 1:
        raise NoSuchLattice(
            f"signature ({p},{q}) is not indefinite: need p >= 1 and q >= 1"
        )
    if (p - q) % 8 != 0:
        raise NoSuchLattice(
            f"no even unimodular form of signature ({p},{q}): p - q must be divisible by 8"
        )
    a = min(p, q)
    b = abs(p - q) // 8
    sign = 0 if b == 0 else (1 if p > q else -1)
    blocks = [hyperbolic_plane()] * a
    blocks += [e8() if sign > 0 else neg(e8())] * b
    lat = dsum(*blocks)
    rebuilt = invariants(lat)
    if rebuilt.signature != (p, q) or abs(rebuilt.determinant) != 1 or not rebuilt.is_even:
        raise PipelineInvariantError("rebuilt decomposition does not match the request")
    return HyperbolicDecomposition(a, b, sign, lat)


# ---------------------------------------------------------------------------
# Orthogonal complements.
# ---------------------------------------------------------------------------

def coordinate_embedding(ambient: Lattice, indices: Sequence[int]) -> tuple:
    """Columns selecting the given ambient coordinates (block embeddings)."""
    n = ambient.rank
    return tuple(
        tuple(1 if i == idx else 0 for idx in indices) for i in range(n)
    )


def complement_in(ambient: Lattice, embedding: Sequence[Sequence[int]]) -> Lattice:
    """The sublattice of the ambient orthogonal to the embedded columns.

    `embedding` is a matrix with ambient.rank rows whose columns express a
    sublattice basis in ambient coordinates.  The complement basis is the
    integer kernel of (embedding^T . gram), computed by unimodular column
    reduction, hence saturated.  If the embedded sublattice is unimodular,
    rank additivity and unimodularity of the complement are asserted.

    Emits :class:`NotPrimitiveWarning` when the supplied basis spans a
    non-primitive sublattice (its elementary divisors are not all 1).
    """
    n = ambient.rank
    cols_matrix = [list(map(int, row)) for row in embedding]
    if len(cols_matrix) != n:
        raise ValueError(
            f"embedding must have {n} rows (one per ambient coordinate), got {len(cols_matrix)}"
        )
    k = len(cols_matrix[0]) if cols_matrix and cols_matrix[0] else 0
    for row in cols_matrix:
        if len(row) != k:
            raise ValueError("embedding rows must all have the same length")

    amb_inv = invariants(ambient)
    if amb_inv.is_degenerate:
        raise DegenerateForm("orthogonal complements require a nondegenerate ambient form")

    if k == 0:
        return Lattice(ambient.gram, label=ambient.label)

    gram = ambient.gram
    # pairing matrix: row per basis column, entry <basis_col, e_j>
    pairing = [
        [
            sum(cols_matrix[i][c] * gram[i][j] for i in range(n))
            for j in range(n)
        ]
        for c in range(k)
    ]
    rank_a, v = _column_reduce_with_transform(pairing, n)
    if rank_a < k:
        # gram is nondegenerate, so rank(B^T G) = rank(B)
        raise RankDeficient("embedding columns are linearly dependent")

    divisors = _unimodular_diagonal(cols_matrix)
    if len(divisors) < k or any(abs(d) != 1 for d in divisors):
        warnings.warn(
            "embedded sublattice is not primitive; its saturation is used implicitly "
            "by the kernel computation",
            NotPrimitiveWarning,
            stacklevel=2,
        )

    kernel_cols = [[v[i][j] for i in range(n)] for j in range(rank_a, n)]
    comp_gram = tuple(
        tuple(
            sum(
                kernel_cols[a][i] * gram[i][j] * kernel_cols[b][j]
                for i in range(n)
                for j in range(n)
            )
            for b in range(len(kernel_cols))
        )
        for a in range(len(kernel_cols))
    )
    comp = Lattice(comp_gram)

    sub_gram = tuple(
        tuple(
            sum(
                cols_matrix[i][a] * gram[i][j] * cols_matrix[j][b]
                for i in range(n)
                for j in range(n)
            )
            for b in range(k)
        )
        for a in range(k)
    )
    if abs(_det_bareiss(sub_gram)) == 1:
        if comp.rank + k != n or abs(_det_bareiss(comp_gram)) != 1:
            raise PipelineInvariantError(
                "complement of a unimodular sublattice must be unimodular of complementary rank"
            )
    return comp


# ---------------------------------------------------------------------------
# Theta series by exhaustive enumeration.
# ---------------------------------------------------------------------------

def _cholesky_rational(gram: Sequence[Sequence[int]]):
    """Completing-the-square data: Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2."""
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = q[i][i]
        if d[i] <= 0:
            raise IndefiniteLattice("completing the square hit a non-positive pivot")
        for j in range(i + 1, n):
            u[i][j] = q[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                q[r][c] -= q[i][r] * q[i][c] / d[i]
    return d, u


def _sqrt_candidates(center: Fraction, radius_sq: Fraction):
    """Integer range certainly containing {x : (x + center)^2 <= radius_sq}."""
    if radius_sq < 0:
        return 1, 0
    a, b = radius_sq.numerator, radius_sq.denominator
    # sqrt(a/b) = sqrt(ab)/b <= (isqrt(ab)+1)/b
    upper = Fraction(isqrt(a * b) + 1, b)
    return ceil(-center - upper), floor(-center + upper)


def _count_by_norm(gram: Sequence[Sequence[int]], bound: int) -> dict:
    """Exact counts {norm: #vectors} with 0 <= Q(v) = norm <= bound,
    for a positive-definite integer Gram matrix."""
    n = len(gram)
    if n == 0:
        return {0: 1}
    d, u = _cholesky_rational(gram)
    counts: dict = {}
    bound_f = Fraction(bound)

    def descend(level: int, used: Fraction, centers: list):
        if level < 0:
            norm = used.numerator  # used is integral here
            if used.denominator != 1:
                raise PipelineInvariantError("vector norm failed to be integral")
            counts[norm] = counts.get(norm, 0) + 1
            return
        budget = bound_f - used
        c = centers[level]
        d_level = d[level]
        lo, hi = _sqrt_candidates(c, budget / d_level)
        u_level = [u[j][level] for j in range(level)]
        for x in range(lo, hi + 1):
            contribution = d_level * (x + c) ** 2
            if contribution <= budget:
                if level:
                    new_centers = [centers[j] + u_level[j] * x for j in range(level)]
                else:
                    new_centers = []
                descend(level - 1, used + contribution, new_centers)

    descend(n - 1, Fraction(0), [Fraction(0)] * n)
    return counts


def _connected_components(gram: Sequence[Sequence[int]]) -> list:
    """Index sets of the Gram matrix's pairing graph, each sorted."""
    n = len(gram)
    seen = [False] * n
    components = []
    for start in range(n):
        if seen[start]:
            continue
        stack, members = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            members.append(i)
            for j in range(n):
                if not seen[j] and gram[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        components.append(sorted(members))
    return components


def _definiteness(lat: Lattice) -> int:
    """+1 for positive definite, -1 for negative definite; raises otherwise."""
    inv = invariants(lat)
    if lat.rank == 0:
        return 1
    if inv.is_degenerate or (inv.signature[0] > 0 and inv.signature[1] > 0):
        raise IndefiniteLattice(
            f"enumeration requires a definite form, got signature {inv.signature}"
            + (" (degenerate)" if inv.is_degenerate else "")
        )
    return 1 if inv.signature[0] > 0 else -1


def theta_definite(lat: Lattice, trunc: int) -> QSeries:
    """Theta series of a definite even lattice through q**trunc.

    The q^r coefficient is the exact number of lattice vectors v with
    |<v, v>| = 2r, found by exhaustive enumeration (the q^0 term counts the
    zero vector).  Indefinite input is refused: infinitely many vectors
    share each norm, and the regularized replacement lives in the counting
    pipeline, not here.
    """
    if trunc < 0:
        raise ValueError("truncation order must be non-negative")
    sign = _definiteness(lat)
    if lat.rank == 0:
        return QSeries.one(trunc)
    inv_even = all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))
    if not inv_even:
        raise OddLattice(
            "theta expansion in integer q-powers requires an even lattice; "
            "this one takes odd vector norms"
        )
    gram = lat.gram if sign > 0 else tuple(tuple(-x for x in row) for row in lat.gram)
    # Orthogonal blocks contribute independently: enumerate each connected
    # component of the pairing graph and convolve the block series.
    series = QSeries.one(trunc)
    for component in _connected_components(gram):
        block = tuple(tuple(gram[i][j] for j in component) for i in component)
        counts = _count_by_norm(block, 2 * trunc)
        if any(norm % 2 for norm in counts):
            raise PipelineInvariantError("even lattice produced an odd vector norm")
        series = series * QSeries([counts.get(2 * r, 0) for r in range(trunc + 1)])
    return series


def count_vectors_of_norm(lat: Lattice, norm: int) -> int:
    """Exact number of vectors with <v, v> equal to the given integer.

    Sign-sensitive: a positive-definite lattice has no vectors of negative
    norm and vice versa; norm 0 counts exactly the zero vector.
    """
    sign = _definiteness(lat)
    if norm == 0:
        return 1
    if lat.rank == 0:
        return 0
    if (norm > 0) != (sign > 0):
        return 0
    gram = lat.gram if sign > 0 else tuple(tuple(-x for x in row) for row in lat.gram)
    counts = _count_by_norm(gram, abs(norm))
    return counts.get(abs(norm), 0)

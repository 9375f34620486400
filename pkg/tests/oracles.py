"""Independent brute-force oracles used to cross-check library results.

Every routine here is deliberately implemented by the most naive route
available — direct divisor sums, explicit polynomial products over plain
coefficient lists, two-variable splitting expansions, box enumeration —
and shares no code with the library.  Agreement between an oracle and the
library is therefore evidence, not tautology.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, isqrt


# ---------------------------------------------------------------------------
# Plain-list power series helpers (coefficients indexed 0..trunc).
# ---------------------------------------------------------------------------

def poly_mul(a: list, b: list, trunc: int) -> list:
    """Truncated Cauchy product of two plain coefficient lists."""
    out = [0] * (trunc + 1)
    for i, ai in enumerate(a[: trunc + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: trunc + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def poly_inv(a: list, trunc: int) -> list:
    """Invert a plain coefficient list with a[0] = 1 by the naive recurrence."""
    assert a[0] == 1
    b = [Fraction(0)] * (trunc + 1)
    b[0] = Fraction(1)
    for m in range(1, trunc + 1):
        s = Fraction(0)
        for k in range(1, m + 1):
            ak = a[k] if k < len(a) else 0
            if ak:
                s += ak * b[m - k]
        b[m] = -s
    return b


# ---------------------------------------------------------------------------
# Divisor sums and Eisenstein data.
# ---------------------------------------------------------------------------

def sigma_oracle(power: int, n: int) -> int:
    """sigma_power(n) by trial division over every candidate divisor."""
    return sum(d ** power for d in range(1, n + 1) if n % d == 0)


# ---------------------------------------------------------------------------
# Yau–Zaslow product and the discriminant product.
# ---------------------------------------------------------------------------

def yau_zaslow_oracle(trunc: int) -> list:
    """prod_{i>=1} (1-q^i)^(-24) by multiplying 24 geometric factors per i.

    Each factor 1/(1-q^i) is written out as the literal geometric series
    1 + q^i + q^(2i) + ... and multiplied in, 24 times for every i.
    """
    series = [1] + [0] * trunc
    for i in range(1, trunc + 1):
        geo = [1 if k % i == 0 else 0 for k in range(trunc + 1)]
        for _ in range(24):
            series = poly_mul(series, geo, trunc)
    return series


def discriminant_oracle(trunc: int) -> list:
    """q * prod_{i>=1} (1-q^i)^24 by literal repeated multiplication."""
    series = [1] + [0] * trunc
    for i in range(1, trunc + 1):
        factor = [0] * (trunc + 1)
        factor[0] = 1
        if i <= trunc:
            factor[i] = -1
        for _ in range(24):
            series = poly_mul(series, factor, trunc)
    return [0] + series[:trunc]


def triple_convolution_oracle(a: list, b: list, c: list, trunc: int) -> list:
    """Single-pass triple Cauchy product: out[n] = sum_{i+j+k=n} a_i b_j c_k."""
    out = [0] * (trunc + 1)
    for n in range(trunc + 1):
        acc = 0
        for i in range(n + 1):
            if i < len(a) and a[i]:
                for j in range(n - i + 1):
                    k = n - i - j
                    if j < len(b) and k < len(c) and b[j]:
                        acc += a[i] * b[j] * c[k]
        out[n] = acc
    return out


# ---------------------------------------------------------------------------
# Two-root splitting oracle for the Todd class.
# ---------------------------------------------------------------------------

def todd_root_series_oracle(trunc: int) -> list:
    """Coefficients of t/(1 - exp(-t)) through t^trunc, via naive inversion."""
    # (1 - exp(-t))/t = sum_{k>=0} (-1)^k t^k / (k+1)!
    denom = [Fraction((-1) ** k, factorial(k + 1)) for k in range(trunc + 1)]
    return poly_inv(denom, trunc)


def two_root_todd_oracle(max_degree: int) -> dict:
    """Todd polynomial of a rank-2 bundle by explicit root splitting.

    Expands f(x)*f(y) with f(t) = t/(1-exp(-t)) in two formal roots x, y
    through total degree max_degree, then rewrites every symmetric monomial
    in the elementary symmetric polynomials e1 = x+y, e2 = xy.  Returns a
    map (e1 exponent, e2 exponent) -> coefficient.
    """
    f = todd_root_series_oracle(max_degree)
    # product in Q[x, y], keyed by (deg x, deg y)
    two_var = {}
    for i, fi in enumerate(f):
        for j, fj in enumerate(f):
            if i + j <= max_degree and fi and fj:
                key = (i, j)
                two_var[key] = two_var.get(key, Fraction(0)) + fi * fj
    return symmetric_reduce_oracle(two_var, max_degree)


def symmetric_reduce_oracle(two_var: dict, max_degree: int) -> dict:
    """Rewrite a symmetric polynomial in x, y as a polynomial in e1, e2.

    Repeatedly subtracts coeff * e1^(a-b) * e2^b for the lex-leading
    monomial x^a y^b (a >= b); terminates because the leading term strictly
    drops.  Asserts the input really is symmetric.
    """
    work = {k: v for k, v in two_var.items() if v != 0}
    for (i, j), v in list(work.items()):
        assert work.get((j, i), Fraction(0)) == v, "input not symmetric"
    out = {}
    while work:
        (a, b) = max(work)            # lex-leading exponent pair
        coeff = work[(a, b)]
        if a < b:
            a, b = b, a
        out[(a - b, b)] = out.get((a - b, b), Fraction(0)) + coeff
        # subtract coeff * (x+y)^(a-b) * (xy)^b expanded
        for t in range(a - b + 1):
            binom = Fraction(factorial(a - b), factorial(t) * factorial(a - b - t))
            key = (a - b - t + b, t + b)
            work[key] = work.get(key, Fraction(0)) - coeff * binom
            if work[key] == 0:
                del work[key]
    return {k: v for k, v in out.items() if v != 0}


# ---------------------------------------------------------------------------
# Chern/Segre inversion oracle.
# ---------------------------------------------------------------------------

def chern_character_of_roots(roots: list, max_degree: int) -> list:
    """ch_1..ch_max_degree of a bundle with the given integer Chern roots."""
    return [
        Fraction(sum(r ** i for r in roots), factorial(i))
        for i in range(1, max_degree + 1)
    ]


def inverse_total_chern_oracle(roots: list, max_degree: int) -> list:
    """s_1..s_max_degree with 1 + s_1 t + ... = 1 / prod_i (1 + r_i t)."""
    total = [1]
    for r in roots:
        total = poly_mul(total, [1, r], max_degree)
    total = total + [0] * (max_degree + 1 - len(total))
    inv = poly_inv([Fraction(c) for c in total], max_degree)
    return inv[1:]


# ---------------------------------------------------------------------------
# Lattice-point counting by box enumeration.
# ---------------------------------------------------------------------------

def box_count_oracle(gram: list, norm_bound: int, box: int) -> dict:
    """Count vectors by norm via exhaustive enumeration of a coordinate box.

    Iterates every integer vector with |x_i| <= box and tallies the value of
    the quadratic form when it is <= norm_bound.  The caller is responsible
    for choosing a box large enough to contain every vector of norm within
    the bound (trivial for diagonal forms; for others use a generous box).
    """
    n = len(gram)
    counts = {}
    ranges = [range(-box, box + 1)] * n

    def rec(i, vec):
        if i == n:
            norm = sum(vec[a] * gram[a][b] * vec[b] for a in range(n) for b in range(n))
            if 0 <= norm <= norm_bound:
                counts[norm] = counts.get(norm, 0) + 1
            return
        for x in ranges[i]:
            rec(i + 1, vec + [x])

    rec(0, [])
    return counts


# ---------------------------------------------------------------------------
# Eigenvalue sign counts via characteristic polynomial + Sturm bisection.
# ---------------------------------------------------------------------------

def _poly_trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return _poly_trim([
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    ])


def _poly_mul(p: list, q: list) -> list:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return _poly_trim(out)


def _poly_neg(p: list) -> list:
    return [-c for c in p]


def _poly_rem(p: list, q: list) -> list:
    """Remainder of polynomial division p mod q over the rationals."""
    p = [Fraction(c) for c in p]
    q = _poly_trim([Fraction(c) for c in q])
    while len(p) >= len(q) and _poly_trim(p) != [Fraction(0)]:
        p = _poly_trim(p)
        if len(p) < len(q):
            break
        factor = p[-1] / q[-1]
        shift = len(p) - len(q)
        for i, qc in enumerate(q):
            p[shift + i] -= factor * qc
        p = _poly_trim(p)
    return _poly_trim(p)


def _poly_deriv(p: list) -> list:
    return _poly_trim([i * c for i, c in enumerate(p)][1:]) or [Fraction(0)]


def _poly_eval(p: list, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_gcd(p: list, q: list) -> list:
    p, q = _poly_trim(p), _poly_trim(q)
    while q != [Fraction(0)] and q != [0]:
        p, q = q, _poly_rem(p, q)
    return p


def char_poly_oracle(matrix: list) -> list:
    """det(x*I - M) as a coefficient list, by Laplace expansion with
    polynomial entries (fine for the small ranks this oracle serves)."""
    n = len(matrix)
    entries = [
        [
            [Fraction(-matrix[i][j]), Fraction(1)] if i == j else [Fraction(-matrix[i][j])]
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(mat):
        if len(mat) == 1:
            return mat[0][0]
        total = [Fraction(0)]
        for j in range(len(mat)):
            minor = [[row[jj] for jj in range(len(mat)) if jj != j] for row in mat[1:]]
            term = _poly_mul(mat[0][j], det(minor))
            total = _poly_add(total, term if j % 2 == 0 else _poly_neg(term))
        return total

    return det(entries)


def eigen_sign_counts_oracle(matrix: list):
    """(n_pos, n_neg, n_zero) eigenvalue counts of a symmetric integer matrix.

    Uses the characteristic polynomial and a Sturm chain evaluated at exact
    rational points (a Cauchy root bound, 0, and -bound).  Returns None when
    the characteristic polynomial is not squarefree, in which case distinct
    roots would not equal roots with multiplicity and the sample should be
    skipped by the caller.
    """
    p = char_poly_oracle(matrix)
    if len(_poly_gcd(p, _poly_deriv(p))) > 1:
        return None
    chain = [p, _poly_deriv(p)]
    while _poly_trim(chain[-1]) != [Fraction(0)]:
        rem = _poly_rem(chain[-2], chain[-1])
        if rem == [Fraction(0)] or rem == [0]:
            break
        chain.append(_poly_neg(rem))

    def variations(x):
        signs = []
        for poly in chain:
            v = _poly_eval(poly, x)
            if v != 0:
                signs.append(1 if v > 0 else -1)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    bound = Fraction(1) + max(abs(c) for c in p)
    n_zero = 1 if p[0] == 0 else 0
    # distinct roots in (a, b] equal variations(a) - variations(b)
    n_pos = variations(Fraction(0)) - variations(bound)
    n_neg = (variations(-bound) - variations(Fraction(0))) - n_zero
    return n_pos, n_neg, n_zero


# ---------------------------------------------------------------------------
# Level-1 modular form dimensions (classical closed formula).
# ---------------------------------------------------------------------------

def dim_level_one_forms_oracle(k: int) -> int:
    """dim of weight-k level-1 forms: floor(k/12)+1, minus one when k=2 mod 12."""
    if k < 0 or k % 2 == 1:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1

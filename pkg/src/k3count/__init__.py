"""k3count: exact-arithmetic curve counting for K3-fibered threefolds.

The package computes, over exact rationals only, the generating functions of
virtual nodal-curve counts in fiberwise classes of tamed K3 fibrations over a
curve, factored as

    F(q) = prefactor * (rational-curve series of a single K3) * (pinned theta factor)

together with the supporting machinery: truncated q-series, even unimodular
lattices and their theta series, level-1 modular forms, Todd/Segre
characteristic-class calculus, and the numerical bookkeeping of the
fibrations themselves (singular-fiber counts, symplectic-volume degree,
local defects, dimension formulas).

Modules
-------
exactq     truncated q-series over Fraction; Eisenstein/discriminant series
lattice    integer Gram matrices, invariants, classification, complements,
           theta series by exact enumeration
modforms   level-1 modular forms in the monomial basis E4^a E6^b
charclass  graded Todd/Chern/Segre calculus and fiberwise pushforwards
fibration  declarative fibration descriptions and their numerical identities
counting   the assembled generating-function pipeline
cli        command-line interface over all of the above
"""

__version__ = "0.1.0"

"""Level-1 modular forms and the uniqueness pin.

The counting pipeline replaces an indefinite theta function by "the
level-1 modular form of the right weight with constant term 1".  That
phrase defines a unique series exactly when the space of forms of that
weight is one-dimensional — which is what makes weights 6 and 10 (the
two shipped examples) work, and weight 2 (full-rank fiberwise lattice)
fail gracefully.

Run:  python demos/03_modular_pin.py
"""

from fractions import Fraction

from k3count.errors import Underdetermined
from k3count.exactq import delta
from k3count.modforms import express_in_basis, pin_normalized, space

print("Dimensions of the space of level-1 forms (monomials E4^a E6^b):")
for weight in range(0, 25, 2):
    s = space(weight)
    monomials = " ".join(f"E4^{a}E6^{b}" for a, b in s.monomials) or "-"
    print(f"  weight {weight:2d}: dim {s.dimension}  [{monomials}]")

print()
print("Pinning by 'constant term 1' where the dimension is 1:")
for weight in (6, 10):
    series = pin_normalized(weight, 3)
    print(f"  weight {weight:2d} -> {list(series.coeffs)}")

print()
print("Weight 12 has dimension 2, so the pin is refused:")
try:
    pin_normalized(12, 3)
except Underdetermined as exc:
    print(f"  Underdetermined: {exc}")

print()
print("Exact linear algebra in the monomial basis: Delta at weight 12")
coeffs = express_in_basis(delta(8), 12)
print(f"  Delta = {coeffs[0]} * E4^3 + {coeffs[1]} * E6^2")
assert coeffs == [Fraction(1, 1728), Fraction(-1, 1728)]

"""Todd classes, fiber integration, and the family index rank on K3 fibers.

The rank of the index bundle of a line bundle along the K3 fibers drops
out of a purely symbolic computation: expand the rank-2 Todd class times
the Chern character, integrate over the fiber (degree drops by 2), and
specialize to a K3 (fiberwise c1 = 0, c2 integrates to 24).

Run:  python demos/04_family_riemann_roch.py
"""

from fractions import Fraction
from math import factorial

from k3count.charclass import (
    ch_line,
    fiber_integrate,
    k3_grr_rank,
    k3_substitution,
    segre_from_characters,
    surface_rr_virtual_rank,
    todd,
)

print("The rank-2 Todd class through degree 2 (c1, c2 are fiberwise):")
t = todd(2)
for monomial, coefficient in sorted(t.terms.items()):
    a, b, _ = monomial
    name = " ".join(filter(None, [f"c1^{a}" if a else "", f"c2^{b}" if b else ""]))
    print(f"  {str(coefficient):>5s} * {name or '1'}")

print()
print("Degree-0 part of the fiber integral of Todd * ch(line bundle):")
push = fiber_integrate(todd(2) * ch_line(2))
for monomial, coefficient in sorted(push.base_degree_part(0).items()):
    a, b, c = monomial
    print(f"  {coefficient} * integral of c1^{a} c2^{b} C^{c} over the fiber")

print()
print("Specializing to K3 fibers (c1 -> 0, c2 -> 24, C^2 given):")
for c_squared in (-2, 0, 2, 6, 64):
    rank = k3_grr_rank(c_squared)
    direct = surface_rr_virtual_rank(c_squared)
    print(f"  C^2 = {c_squared:3d}: index rank {rank}  (2 + C^2/2 = {direct})")
    assert rank == direct

print()
print("Segre coefficients invert the total Chern class; for a line bundle")
print("with first Chern class 3 they are the geometric series in -3:")
characters = [Fraction(3 ** i, factorial(i)) for i in range(1, 5)]
print(f"  {segre_from_characters(characters)}")

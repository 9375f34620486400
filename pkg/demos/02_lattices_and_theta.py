"""Even unimodular lattices: invariants, classification, complements, theta.

The K3 lattice is the rank-22 even unimodular lattice 3H + 2(-E8) of
signature (3,19).  A fibration's fiberwise lattice embeds in it, and the
counting pipeline needs its orthogonal complement — which, for even
unimodular pieces, is pinned down by signature alone.

Run:  python demos/02_lattices_and_theta.py
"""

from k3count.exactq import eisenstein
from k3count.lattice import (
    build,
    classify_indefinite_even_unimodular,
    complement_in,
    coordinate_embedding,
    e8,
    invariants,
    k3_lattice,
    theta_definite,
)

print("Constructors and invariants:")
for expr in ("H", "E8", "H + -E8", "rank1(4)", "3H + 2(-E8)"):
    print(f"  {expr:14s} -> {invariants(build(expr)).describe()}")

print()
print("Indefinite even unimodular lattices are classified by signature:")
for signature in ((1, 1), (1, 9), (1, 17), (2, 10), (2, 18)):
    decomposition = classify_indefinite_even_unimodular(signature)
    print(f"  signature {signature} -> {decomposition.describe()}")

print()
print("Orthogonal complements inside the K3 lattice:")
ambient = k3_lattice()
for label, indices in (
    ("H (first block)", list(range(0, 2))),
    ("H + -E8", list(range(0, 2)) + list(range(6, 14))),
):
    embedding = coordinate_embedding(ambient, indices)
    complement = complement_in(ambient, embedding)
    print(f"  complement of {label:16s} -> {invariants(complement).describe()}")

print()
print("Theta series by exhaustive vector enumeration (exact arithmetic):")
theta = theta_definite(e8(), 4)
print(f"  Theta_E8 = {list(theta.coeffs)}")
print(f"  E4       = {list(eisenstein(4, 4).coeffs)}")
assert theta.coeffs == eisenstein(4, 4).coeffs
print("  the 240 roots of E8 are literally counted, and the full series")
print("  collides with the weight-4 Eisenstein series, as it must")

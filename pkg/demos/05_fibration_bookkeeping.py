"""Fibration numerology on the three shipped example configs.

* y0 — a Calabi-Yau pencil whose 110 singular fibers are forced by the
  total Euler number;
* z0 — an isometrically trivial family whose entire base degree 2 is
  absorbed by 24 fractional defects of 1/12;
* w0 — the same story with 84 defects of 1/42.

Run:  python demos/05_fibration_bookkeeping.py
"""

from importlib import resources

from k3count.cli import load_config
from k3count.fibration import (
    admissible_y_squares,
    adjunction_genus,
    defect_sum,
    expected_dimensions,
    milnor_brieskorn,
    solve_singular_fiber_count,
    validate,
    wp_degree,
)


def shipped(name):
    return load_config(str(resources.files("k3count") / "configs" / f"{name}.toml"))


print("Validation of the shipped configs:")
for name in ("y0", "z0", "w0"):
    diagnostics = validate(shipped(name))
    print(f"  {name}: {'clean' if not diagnostics else diagnostics}")

print()
print("Euler bookkeeping (y0): each singular fiber has one ordinary double")
print("point, so its Euler number is 23 and every fiber costs one unit:")
y0 = shipped("y0")
count = solve_singular_fiber_count(y0.euler_total, y0.base_genus, 23)
print(f"  chi = {y0.euler_total}  ->  (24*2 - chi)/(24 - 23) = {count} singular fibers")

print()
print("Degree/defect identity over a rational base (c1(B)[B] = 2):")
for name in ("y0", "z0", "w0"):
    spec = shipped(name)
    wp = wp_degree(spec)
    defects = defect_sum(spec)
    detail = " + ".join(
        f"{f.count} x {f.resolved_defect}" for f in spec.fibers
    )
    print(f"  {name}: wp {wp} + defects {defects} ({detail}) = {wp + defects}")

print()
print("Milnor numbers of the quasi-homogeneous fiber singularities:")
for name in ("z0", "w0"):
    exponents = shipped(name).fibers[0].exponents
    print(f"  {name}: exponents {exponents} -> mu = {milnor_brieskorn(exponents)}")

print()
print("Dimension ledger for nodal-curve families (l nodes, grade of the")
print("obstruction class, dimension of the smooth family):")
for c_squared, genus in ((0, 0), (2, 0), (4, 1), (64, 33)):
    report = expected_dimensions(c_squared, genus)
    print(
        f"  C^2={c_squared:3d} g={genus:2d}: l={report.nodes:3d} "
        f"family_dim={report.family_dim:3d} eta_grade={report.eta_grade:3d}"
    )

print()
print(f"Adjunction: a smooth curve of square 64 has genus {adjunction_genus(64)}")
print(f"Admissible second-factor squares for x^2 = 4: {admissible_y_squares(4)}")

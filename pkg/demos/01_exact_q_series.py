"""Exact q-series: the building blocks of the counting pipeline.

Everything in this library is exact — coefficients are integers or
fractions, never floats — and every series carries a hard truncation
order.  Reading past the truncation raises instead of silently
returning zero.

Run:  python demos/01_exact_q_series.py
"""

from fractions import Fraction

from k3count.exactq import QSeries, delta, eisenstein, euler_product, yau_zaslow

N = 8

print("Eisenstein series (weight 4 and 6), the level-1 generators:")
e4 = eisenstein(4, N)
e6 = eisenstein(6, N)
print(f"  E4 = {list(e4.coeffs)[:5]} ...")
print(f"  E6 = {list(e6.coeffs)[:5]} ...")

print()
print("The discriminant cusp form, two ways:")
d_product = delta(N)  # q * product (1 - q^i)^24
d_eisenstein = (e4 ** 3 - e6 ** 2) * Fraction(1, 1728)
print(f"  from the infinite product: {list(d_product.coeffs)}")
print(f"  from (E4^3 - E6^2)/1728:   {list(d_eisenstein.coeffs)}")
assert d_product.coeffs == d_eisenstein.coeffs

print()
print("Rational-curve series of a single K3 (the q/Delta factor):")
yz = yau_zaslow(N)
print(f"  1/prod (1-q^i)^24 = {list(yz.coeffs)}")
print("  the n-th coefficient counts rational curves with n nodes on a")
print("  generic K3 in a class of square 2n - 2")

print()
print("Sanity: Delta times that inverse product telescopes back to q:")
print(f"  Delta * (q/Delta) = {list((delta(N) * yz).coeffs)}")
assert (delta(N) * yz).coeffs == QSeries.q_power(1, N).coeffs

print()
print("Truncation is a hard boundary, not a zero:")
short = euler_product(3)
try:
    short[4]
except IndexError as exc:
    print(f"  reading coefficient 4 of a trunc-3 series -> {type(exc).__name__}")

"""
Truncated polynomials in noncommuting variables
===============================================

Words are tuples of generator indices, coefficients are exact rationals and
every polynomial carries a truncation order.
"""

from bchseries.freealg import Polynomial, component, poly_mul, random_polynomial

# Build polynomials from text; words are concatenated labels.
a = Polynomial.parse("1 + x + 1/2 xx", order=2)
b = Polynomial.parse("1 + y + 1/2 yy", order=2)
print("a      =", a)
print("b      =", b)

# The product keeps only degree <= 2 and never forms the overflow terms.
ab = poly_mul(a, b)
print("a * b  =", ab)

# xy and yx are different words.
x, y = Polynomial.parse("x", 2), Polynomial.parse("y", 2)
print("xy - yx =", poly_mul(x, y) - poly_mul(y, x))

# Homogeneous components re-sum to the polynomial.
for i in range(ab.order + 1):
    print(f"degree {i}:", component(ab, i))

# Seeded random polynomials are reproducible.
print(random_polynomial(42, 2, 2, density=0.5))

"""
Polynomials as upper-triangular Toeplitz matrices
=================================================

The degree-k part of a polynomial sits on the k-th superdiagonal.  Matrix
products reproduce polynomial products in the first row, and matrix series
keep the Toeplitz shape.
"""

from bchseries.freealg import Polynomial, poly_mul, random_polynomial
from bchseries.series import EXP, exp_poly
from bchseries.toeplitz import dump, from_first_row, mat_apply_series, mat_mul, to_toeplitz

A = to_toeplitz(Polynomial.parse("1 + x + 1/2 xx", 2))
B = to_toeplitz(Polynomial.parse("1 + y + 1/2 yy", 2))
print(dump(A), end="\n\n")
print(dump(B), end="\n\n")
C = mat_mul(A, B)
print(dump(C), end="\n\n")
print("first row:", from_first_row(C))

# The same identity for random inputs over three generators.
a, b = random_polynomial(1, 4, 3, 0.4), random_polynomial(2, 4, 3, 0.4)
print("first row == convolution:", from_first_row(mat_mul(to_toeplitz(a), to_toeplitz(b))) == poly_mul(a, b))

# exp of a strictly upper-triangular matrix is a finite sum.
u = random_polynomial(3, 4, 2, 0.4)
u = u - Polynomial.constant(u.constant_term, 4)
E = mat_apply_series(EXP, to_toeplitz(u))
print("exp(U) first row == exp(u):", from_first_row(E) == exp_poly(u))

# The dense backend gives the same matrices.
D = mat_mul(to_toeplitz(a, "dense"), to_toeplitz(b, "dense"))
print("dense == compact:", D.grid() == mat_mul(to_toeplitz(a), to_toeplitz(b)).grid())

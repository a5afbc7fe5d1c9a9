"""
Counting monomial multiplications
=================================

Both routes form exactly the same product terms.  The dense backend, which
computes every row of the matrix, does more work.
"""

from bchseries.metering import count_full_bch, count_product_of_exponentials

r = count_product_of_exponentials(2)
print("exp(x) exp(y), n=2")
print("  direct:", r.direct_counts.as_list(2))
print("  matrix:", r.matrix_counts.as_list(2))

dense = count_product_of_exponentials(2, backend="dense")
print("  dense :", dense.matrix_counts.as_list(2), "(every row recomputed)")

print("\nfull pipeline")
for n in range(1, 7):
    rep = count_full_bch(n)
    print(f"  n={n}: total {rep.direct_counts.total:>5} vs {rep.matrix_counts.total:>5}  equal={rep.equal}")

"""
BCH terms two ways
==================

``bch_direct`` expands log(exp x exp y) in the free algebra; ``bch_matrix``
takes the first row of log(exp M exp N) for the Reinsch matrices M, N.
"""

from bchseries.bch import abelianization_check, bch_direct, bch_matrix, build_reinsch_generators
from bchseries.cli import latex_terms
from bchseries.toeplitz import dump

M, N = build_reinsch_generators(3)
print(dump(M), end="\n\n")

direct = bch_direct(5)
matrix = bch_matrix(5)
print(direct)
print("identical:", direct.terms == matrix.terms)
print("abelianization ok:", abelianization_check(direct))

for term in direct.terms[:4]:
    print(f"z_{term.degree} = {latex_terms(term)}")

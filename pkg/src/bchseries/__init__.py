"""Exact Baker-Campbell-Hausdorff terms, computed two ways.

``bch_direct`` expands ``log(exp(x) exp(y))`` in the truncated free algebra;
``bch_matrix`` reads the same terms off the first row of
``log(exp(M) exp(N))`` for upper-triangular Toeplitz ``M`` and ``N``.  Both
accept a :class:`MulCounter` so their monomial multiplications can be
compared.
"""

__version__ = "0.1.0"

from .bch import BchResult, abelianization_check, bch_direct, bch_matrix, build_reinsch_generators
from .errors import AlgebraError, DegreeRangeError, DomainError, StructureError, UsageError
from .freealg import (
    Alphabet,
    HomogeneousComponent,
    Polynomial,
    component,
    poly_add,
    poly_mul,
    random_polynomial,
    rational,
    scalar_mul,
    word_concat,
)
from .metering import CountReport, MulCounter, count_full_bch, count_product_of_exponentials
from .series import EXP, LOG, Constraint, SeriesFunction, apply_series, exp_poly, log_poly
from .toeplitz import (
    DenseToeplitz,
    ToeplitzRep,
    from_first_row,
    mat_add,
    mat_apply_series,
    mat_mul,
    to_toeplitz,
)

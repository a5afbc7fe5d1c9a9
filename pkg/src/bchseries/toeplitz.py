"""Upper-triangular Toeplitz matrices over the truncated free algebra.

A polynomial ``a = a_0 + a_1 + ... + a_n`` is embedded as the ``(n+1) x (n+1)``
matrix with ``a_k`` on the ``k``-th superdiagonal.  Matrix products, sums and
series then reproduce polynomial products, sums and series in the first row.

Two interchangeable backends:

``ToeplitzRep`` ("compact")
    stores one homogeneous polynomial per diagonal offset; the grid is a view.
``DenseToeplitz`` ("dense")
    stores the full grid and multiplies with the textbook triple loop.  It is
    the literal reference against which the compact backend is tested, and it
    performs (and counts) every structurally nonzero entry product.

Matrix coordinates in this module's interface are 1-based.
"""

from __future__ import annotations

from typing import Sequence

from gmpy2 import mpq

from .errors import StructureError, UsageError
from .freealg import (
    DEFAULT_ALPHABET,
    Alphabet,
    Polynomial,
    accumulate_product,
    format_terms,
    from_accumulator,
    poly_add,
    scalar_mul,
)
from .series import Constraint, SeriesFunction, check_domain, series_terms

__all__ = [
    "BACKENDS",
    "DenseToeplitz",
    "ToeplitzRep",
    "check_invariants",
    "dump",
    "from_first_row",
    "identity",
    "mat_add",
    "mat_apply_composite",
    "mat_apply_series",
    "mat_mul",
    "mat_scale",
    "mat_sub",
    "to_toeplitz",
    "zero_matrix",
]


class _Matrix:
    backend = ""
    n: int

    def entry(self, i: int, j: int) -> Polynomial:
        raise NotImplementedError

    @property
    def size(self) -> int:
        return self.n + 1

    def _check_index(self, i, j):
        if not (1 <= i <= self.n + 1 and 1 <= j <= self.n + 1):
            raise IndexError(f"entry ({i}, {j}) outside a {self.n + 1}x{self.n + 1} matrix")

    def grid(self) -> tuple[tuple[Polynomial, ...], ...]:
        m = self.n + 1
        return tuple(tuple(self.entry(i, j) for j in range(1, m + 1)) for i in range(1, m + 1))

    def first_row(self) -> tuple[Polynomial, ...]:
        return tuple(self.entry(1, j) for j in range(1, self.n + 2))

    def __eq__(self, other):
        if not isinstance(other, _Matrix):
            return NotImplemented
        return self.n == other.n and self.grid() == other.grid()

    def __hash__(self):
        return hash((self.n, self.grid()))

    def __str__(self):
        return dump(self)


class ToeplitzRep(_Matrix):
    """Compact storage: ``bands[k]`` is the degree-``k`` entry on offset ``k``."""

    backend = "compact"
    __slots__ = ("n", "bands")

    def __init__(self, bands: Sequence[Polynomial]):
        bands = tuple(bands)
        if not bands:
            raise UsageError("need at least one band")
        n = len(bands) - 1
        for k, band in enumerate(bands):
            if band.order != n:
                raise StructureError(f"band {k} has truncation order {band.order}, expected {n}")
            if not band.is_homogeneous(k):
                raise StructureError(f"band {k} is not homogeneous of degree {k}")
        self.n = n
        self.bands = bands

    def entry(self, i: int, j: int) -> Polynomial:
        self._check_index(i, j)
        if j < i:
            return Polynomial.zero(self.n)
        return self.bands[j - i]

    def __repr__(self):
        return f"ToeplitzRep(n={self.n}, first_row={[str(b) for b in self.bands]})"


class DenseToeplitz(_Matrix):
    """Full ``(n+1) x (n+1)`` grid.  Not validated on construction."""

    backend = "dense"
    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[Polynomial]]):
        rows = tuple(tuple(r) for r in rows)
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise UsageError("dense matrix must be square and non-empty")
        self.n = m - 1
        self.rows = rows

    def entry(self, i: int, j: int) -> Polynomial:
        self._check_index(i, j)
        return self.rows[i - 1][j - 1]

    def grid(self):
        return self.rows

    def __repr__(self):
        return f"DenseToeplitz(n={self.n})"


BACKENDS = {"compact": ToeplitzRep, "dense": DenseToeplitz}


def _backend_class(backend: str):
    try:
        return BACKENDS[backend]
    except KeyError:
        raise UsageError(f"unknown backend {backend!r}; choose from {sorted(BACKENDS)}") from None


def _from_bands(bands: Sequence[Polynomial], backend: str) -> _Matrix:
    cls = _backend_class(backend)
    if cls is ToeplitzRep:
        return ToeplitzRep(bands)
    n = len(bands) - 1
    zero = Polynomial.zero(n)
    return DenseToeplitz([[bands[j - i] if j >= i else zero for j in range(n + 1)] for i in range(n + 1)])


def to_toeplitz(a: Polynomial, backend: str = "compact") -> _Matrix:
    return _from_bands([a.homogeneous_part(k) for k in range(a.order + 1)], backend)


def identity(n: int, backend: str = "compact") -> _Matrix:
    return to_toeplitz(Polynomial.one(n), backend)


def zero_matrix(n: int, backend: str = "compact") -> _Matrix:
    return to_toeplitz(Polynomial.zero(n), backend)


def check_invariants(A: _Matrix) -> None:
    """Raise :class:`StructureError` unless ``A`` is upper-triangular, graded and Toeplitz."""
    n = A.n
    for i in range(1, n + 2):
        for j in range(1, n + 2):
            e = A.entry(i, j)
            if e.order != n:
                raise StructureError(f"entry ({i}, {j}) has truncation order {e.order}, expected {n}")
            if j < i:
                if not e.is_zero():
                    raise StructureError(f"entry ({i}, {j}) below the diagonal is nonzero")
                continue
            if not e.is_homogeneous(j - i):
                raise StructureError(f"entry ({i}, {j}) is not homogeneous of degree {j - i}")
            if i > 1 and e != A.entry(i - 1, j - 1):
                raise StructureError(f"entry ({i}, {j}) differs from ({i - 1}, {j - 1})")


def is_valid(A: _Matrix) -> bool:
    try:
        check_invariants(A)
    except StructureError:
        return False
    return True


def from_first_row(A: _Matrix) -> Polynomial:
    """Polynomial whose degree-``i`` part is entry ``(1, i+1)``."""
    check_invariants(A)
    total = Polynomial.zero(A.n)
    for e in A.first_row():
        total = poly_add(total, e)
    return total


def _same_shape(A: _Matrix, B: _Matrix) -> None:
    if type(A) is not type(B):
        raise UsageError(f"cannot mix backends {A.backend!r} and {B.backend!r}")
    if A.n != B.n:
        raise UsageError(f"size mismatch: {A.n + 1} vs {B.n + 1}")


def mat_mul(A: _Matrix, B: _Matrix, meter=None) -> _Matrix:
    """Matrix product; each entry product keeps the left factor on the left."""
    _same_shape(A, B)
    n = A.n
    if isinstance(A, ToeplitzRep):
        bands = []
        for k in range(n + 1):
            acc = {}
            for j in range(k + 1):
                a, b = A.bands[j], B.bands[k - j]
                if a and b:
                    accumulate_product(acc, a, b, meter)
            bands.append(from_accumulator(acc, n))
        return ToeplitzRep(bands)
    m = n + 1
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = {}
            for l in range(m):
                a, b = A.rows[i][l], B.rows[l][j]
                if a and b:
                    accumulate_product(acc, a, b, meter)
            row.append(from_accumulator(acc, n))
        rows.append(row)
    return DenseToeplitz(rows)


def _entrywise(A: _Matrix, B: _Matrix, op) -> _Matrix:
    _same_shape(A, B)
    if isinstance(A, ToeplitzRep):
        return ToeplitzRep([op(a, b) for a, b in zip(A.bands, B.bands)])
    return DenseToeplitz([[op(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)])


def mat_add(A: _Matrix, B: _Matrix) -> _Matrix:
    return _entrywise(A, B, poly_add)


def mat_sub(A: _Matrix, B: _Matrix) -> _Matrix:
    return _entrywise(A, B, lambda a, b: a - b)


def mat_scale(q, A: _Matrix, meter=None) -> _Matrix:
    q = mpq(q)
    if isinstance(A, ToeplitzRep):
        return ToeplitzRep([scalar_mul(q, b, meter) for b in A.bands])
    return DenseToeplitz([[scalar_mul(q, e, meter) for e in row] for row in A.rows])


def _is_zero_matrix(A: _Matrix) -> bool:
    if isinstance(A, ToeplitzRep):
        return not any(A.bands)
    return not any(e for row in A.rows for e in row)


def mat_apply_series(f: SeriesFunction, A: _Matrix, meter=None) -> _Matrix:
    """``sum_{k<=n} f_k U^k`` with ``U = A`` (or ``A - I``), powers by left fold.

    For a zero diagonal ``U`` is nilpotent with ``U^(n+1) = 0``, so the finite
    sum is exact.
    """
    check_invariants(A)
    check_domain(f, A.entry(1, 1).constant_term)
    n = A.n
    eye = identity(n, A.backend)
    U = mat_sub(A, eye) if f.constraint is Constraint.CONSTANT_TERM_ONE else A
    result = mat_scale(f.coefficient(0), eye, meter)
    power = eye
    for k in range(1, series_terms(f, n) + 1):
        power = U if k == 1 else mat_mul(power, U, meter)
        if _is_zero_matrix(power):
            break
        fk = f.coefficient(k)
        if fk != 0:
            result = mat_add(result, mat_scale(fk, power, meter))
    return result


def mat_apply_composite(h: SeriesFunction, f: SeriesFunction, A: _Matrix,
                        g: SeriesFunction, B: _Matrix, meter=None) -> _Matrix:
    """``h(f(A) g(B))``, the matrix counterpart of :func:`series.apply_composite`."""
    fa = mat_apply_series(f, A, meter)
    gb = mat_apply_series(g, B, meter)
    return mat_apply_series(h, mat_mul(fa, gb, meter), meter)


def dump(A: _Matrix, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
    """Row-major text dump: entries in term format joined by ``" | "``, one row per line."""
    return "\n".join(
        " | ".join(format_terms(e, alphabet) for e in row) for row in A.grid()
    )

"""``z = log(exp(x) exp(y))`` to order ``n``, by direct expansion and by Reinsch matrices."""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import UsageError
from .freealg import Alphabet, HomogeneousComponent, Polynomial, format_terms, poly_mul
from .metering import MulCounter
from .series import EXP, LOG, exp_poly, log_poly
from .toeplitz import from_first_row, mat_apply_series, mat_mul, to_toeplitz

X, Y = 0, 1
XY_ALPHABET = Alphabet(labels=("x", "y"))

__all__ = [
    "BchResult",
    "X",
    "XY_ALPHABET",
    "Y",
    "abelianization_check",
    "bch_direct",
    "bch_matrix",
    "build_reinsch_generators",
    "reinsch_product",
]


@dataclass(frozen=True)
class BchResult:
    order: int
    terms: tuple[HomogeneousComponent, ...]
    method: str
    meter: MulCounter

    def term(self, degree: int) -> HomogeneousComponent:
        return self.terms[degree - 1]

    def polynomial(self) -> Polynomial:
        return Polynomial({w: c for t in self.terms for w, c in t}, self.order)

    def __str__(self):
        return "\n".join(f"deg {t.degree}: {format_terms(t, XY_ALPHABET, sep='  ')}" for t in self.terms)


def _check_order(n: int) -> None:
    if n < 1:
        raise UsageError(f"BCH order must be at least 1, got {n}")


def _result(z: Polynomial, method: str, meter: MulCounter) -> BchResult:
    return BchResult(z.order, tuple(z.component(i) for i in range(1, z.order + 1)), method, meter.snapshot())


def bch_direct(n: int, meter: MulCounter | None = None) -> BchResult:
    _check_order(n)
    meter = MulCounter() if meter is None else meter
    ex = exp_poly(Polynomial.generator(X, n), meter)
    ey = exp_poly(Polynomial.generator(Y, n), meter)
    return _result(log_poly(poly_mul(ex, ey, meter), meter), "direct", meter)


def build_reinsch_generators(n: int, backend: str = "compact"):
    """``M`` and ``N``: ``x`` (resp. ``y``) on the first superdiagonal, zero elsewhere."""
    _check_order(n)
    return (to_toeplitz(Polynomial.generator(X, n), backend),
            to_toeplitz(Polynomial.generator(Y, n), backend))


def reinsch_product(n: int, meter: MulCounter | None = None, backend: str = "compact"):
    """``exp(M) exp(N)``."""
    M, N = build_reinsch_generators(n, backend)
    return mat_mul(mat_apply_series(EXP, M, meter), mat_apply_series(EXP, N, meter), meter)


def bch_matrix(n: int, meter: MulCounter | None = None, backend: str = "compact") -> BchResult:
    """First row of ``log(exp(M) exp(N))``; uses matrix operations only."""
    _check_order(n)
    meter = MulCounter() if meter is None else meter
    Z = mat_apply_series(LOG, reinsch_product(n, meter, backend), meter)
    return _result(from_first_row(Z), "matrix", meter)


def abelianization_check(r: BchResult) -> bool:
    """Map every word to ``t^len``: degree 1 must give ``2t`` and higher degrees 0."""
    for term in r.terms:
        total = sum((c for _, c in term), mpq(0))
        if total != (2 if term.degree == 1 else 0):
            return False
    return True

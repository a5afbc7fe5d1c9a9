"""Formal series ``f(a)`` evaluated directly in the truncated polynomial algebra."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

from gmpy2 import mpq

from .errors import DomainError, UsageError
from .freealg import Polynomial, poly_add, poly_mul, scalar_mul

__all__ = [
    "Constraint",
    "EXP",
    "LOG",
    "SeriesFunction",
    "apply_composite",
    "apply_series",
    "check_domain",
    "exp_poly",
    "log_poly",
    "polynomial_function",
    "series_terms",
]


class Constraint(str, Enum):
    CONSTANT_TERM_ZERO = "constant_term_zero"
    CONSTANT_TERM_ONE = "constant_term_one"
    NONE = "none"


@dataclass(frozen=True)
class SeriesFunction:
    """Scalar coefficient sequence ``f_k`` plus the constant-term constraint on its argument.

    For ``CONSTANT_TERM_ONE`` the series is in powers of ``a - 1``.  A
    function with ``Constraint.NONE`` must be a polynomial: ``degree`` bounds
    the highest power used, since the argument may carry a constant term.
    """

    name: str
    coeff: Callable[[int], object]
    constraint: Constraint = Constraint.CONSTANT_TERM_ZERO
    degree: int | None = None

    def __post_init__(self):
        if self.constraint is Constraint.NONE and self.degree is None:
            raise UsageError(f"{self.name}: an unconstrained function needs a finite degree")

    def coefficient(self, k: int) -> mpq:
        return mpq(self.coeff(k))


@lru_cache(maxsize=None)
def _exp_coeff(k: int) -> mpq:
    return mpq(1, factorial(k))


@lru_cache(maxsize=None)
def _log_coeff(k: int) -> mpq:
    return mpq(0) if k == 0 else mpq((-1) ** (k + 1), k)


EXP = SeriesFunction("exp", _exp_coeff, Constraint.CONSTANT_TERM_ZERO)
LOG = SeriesFunction("log", _log_coeff, Constraint.CONSTANT_TERM_ONE)


def polynomial_function(name: str, coeffs: Sequence) -> SeriesFunction:
    """Ordinary polynomial ``sum_k coeffs[k] t^k``; applicable to any argument."""
    frozen = tuple(mpq(c) for c in coeffs)
    return SeriesFunction(
        name,
        lambda k: frozen[k] if k < len(frozen) else 0,
        Constraint.NONE,
        degree=len(frozen) - 1,
    )


def check_domain(f: SeriesFunction, constant) -> None:
    if f.constraint is Constraint.CONSTANT_TERM_ZERO and constant != 0:
        raise DomainError(f.constraint.value, f"{f.name} needs a zero constant term, got {constant}")
    if f.constraint is Constraint.CONSTANT_TERM_ONE and constant != 1:
        raise DomainError(f.constraint.value, f"{f.name} needs constant term 1, got {constant}")


def series_terms(f: SeriesFunction, n: int) -> int:
    """Highest power ``k`` evaluated at truncation order ``n``."""
    if f.constraint is Constraint.NONE:
        return f.degree
    # u has no constant term, so u^(n+1) starts above degree n
    return n if f.degree is None else min(n, f.degree)


def apply_series(f: SeriesFunction, a: Polynomial, meter=None) -> Polynomial:
    """``sum_{k<=n} f_k u^k`` with ``u = a`` (or ``a - 1``), powers by left fold."""
    check_domain(f, a.constant_term)
    n = a.order
    one = Polynomial.one(n)
    u = a - one if f.constraint is Constraint.CONSTANT_TERM_ONE else a
    result = scalar_mul(f.coefficient(0), one, meter)
    power = one
    for k in range(1, series_terms(f, n) + 1):
        power = u if k == 1 else poly_mul(power, u, meter)
        if power.is_zero():
            break
        fk = f.coefficient(k)
        if fk != 0:
            result = poly_add(result, scalar_mul(fk, power, meter))
    return result


def exp_poly(a: Polynomial, meter=None) -> Polynomial:
    return apply_series(EXP, a, meter)


def log_poly(a: Polynomial, meter=None) -> Polynomial:
    return apply_series(LOG, a, meter)


def apply_composite(h: SeriesFunction, f: SeriesFunction, a: Polynomial,
                    g: SeriesFunction, b: Polynomial, meter=None) -> Polynomial:
    """``h(f(a) g(b))``; ``f(a) g(b)`` must satisfy ``h``'s constraint."""
    fa = apply_series(f, a, meter)
    gb = apply_series(g, b, meter)
    return apply_series(h, poly_mul(fa, gb, meter), meter)

"""Monomial-multiplication counters and the like-for-like count comparison.

One count is one product term formed from a nonzero stored term of each
factor (coefficient times coefficient plus a word concatenation), tallied
under the degree of the resulting word.  Scalar rescalings by series
coefficients go to a separate bucket that the equality verdict ignores.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import UsageError


class MulCounter:
    """Accumulates multiplication counts per result degree."""

    def __init__(self):
        self.per_degree: Counter[int] = Counter()
        self.scalar_per_degree: Counter[int] = Counter()

    def record(self, degree: int, count: int = 1) -> None:
        if count < 0:
            raise UsageError("counters only increase")
        if count:
            self.per_degree[degree] += count

    def record_scalar(self, degree: int, count: int = 1) -> None:
        if count < 0:
            raise UsageError("counters only increase")
        if count:
            self.scalar_per_degree[degree] += count

    @property
    def total(self) -> int:
        return sum(self.per_degree.values())

    @property
    def scalar_total(self) -> int:
        return sum(self.scalar_per_degree.values())

    def snapshot(self) -> "MulCounter":
        copy = MulCounter()
        copy.per_degree.update(self.per_degree)
        copy.scalar_per_degree.update(self.scalar_per_degree)
        return copy

    def as_list(self, order: int) -> list[int]:
        """Counts for degrees ``0..order`` as a dense list."""
        return [self.per_degree.get(i, 0) for i in range(order + 1)]

    def __eq__(self, other):
        if not isinstance(other, MulCounter):
            return NotImplemented
        return self.per_degree == other.per_degree and self.scalar_per_degree == other.scalar_per_degree

    def __repr__(self):
        return f"MulCounter(per_degree={dict(sorted(self.per_degree.items()))}, total={self.total})"

    def to_dict(self, order: int) -> dict:
        return {
            "per_degree": self.as_list(order),
            "total": self.total,
            "scalar_per_degree": [self.scalar_per_degree.get(i, 0) for i in range(order + 1)],
            "scalar_total": self.scalar_total,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MulCounter":
        meter = cls()
        for i, c in enumerate(data["per_degree"]):
            meter.record(i, c)
        for i, c in enumerate(data.get("scalar_per_degree", ())):
            meter.record_scalar(i, c)
        if meter.total != data["total"]:
            raise UsageError("per_degree does not sum to total")
        return meter


@dataclass(frozen=True)
class CountReport:
    order: int
    scope: str
    backend: str
    direct_counts: MulCounter
    matrix_counts: MulCounter

    @property
    def equal(self) -> bool:
        return self.direct_counts.per_degree == self.matrix_counts.per_degree

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "scope": self.scope,
            "backend": self.backend,
            "direct": self.direct_counts.to_dict(self.order),
            "matrix": self.matrix_counts.to_dict(self.order),
            "equal": self.equal,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CountReport":
        report = cls(
            order=data["order"],
            scope=data["scope"],
            backend=data["backend"],
            direct_counts=MulCounter.from_dict(data["direct"]),
            matrix_counts=MulCounter.from_dict(data["matrix"]),
        )
        if report.equal != data["equal"]:
            raise UsageError("stored verdict disagrees with the counts")
        return report


def count_product_of_exponentials(n: int, backend: str = "compact") -> CountReport:
    """Count only the final ``exp(x) * exp(y)`` product on both paths.

    The exponentials themselves are computed unmetered on both sides.
    """
    from . import series, toeplitz
    from .bch import X, Y
    from .freealg import Polynomial, poly_mul

    if n < 0:
        raise UsageError(f"order must be non-negative, got {n}")
    ex = series.exp_poly(Polynomial.generator(X, n))
    ey = series.exp_poly(Polynomial.generator(Y, n))
    direct = MulCounter()
    poly_mul(ex, ey, direct)

    em = toeplitz.mat_apply_series(series.EXP, toeplitz.to_toeplitz(Polynomial.generator(X, n), backend))
    en = toeplitz.mat_apply_series(series.EXP, toeplitz.to_toeplitz(Polynomial.generator(Y, n), backend))
    matrix = MulCounter()
    toeplitz.mat_mul(em, en, matrix)
    return CountReport(n, "product", backend, direct, matrix)


def count_full_bch(n: int, backend: str = "compact") -> CountReport:
    """Meter the whole exp, product, log pipeline on both paths."""
    from .bch import bch_direct, bch_matrix

    direct = MulCounter()
    matrix = MulCounter()
    bch_direct(n, direct)
    bch_matrix(n, matrix, backend=backend)
    return CountReport(n, "full", backend, direct, matrix)

"""Randomized check that the matrix route and the direct expansion agree."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import toeplitz
from .errors import AlgebraError, UsageError
from .freealg import EMPTY_WORD, Polynomial, poly_mul, random_polynomial
from .series import EXP, LOG, exp_poly, log_poly

CHECKS = (
    "first_row_product",
    "product_homomorphism",
    "product_invariants",
    "exp_log_roundtrip",
    "log_exp_roundtrip",
    "matrix_exp",
    "matrix_log",
)


@dataclass(frozen=True)
class Failure:
    seed: int
    generators: int
    n: int
    trial: int
    check: str
    detail: str = ""

    def reproducer(self) -> str:
        return (f"seed={self.seed} generators={self.generators} n={self.n} "
                f"trial={self.trial} check={self.check}")

    def to_dict(self) -> dict:
        return {"seed": self.seed, "generators": self.generators, "n": self.n,
                "trial": self.trial, "check": self.check, "detail": self.detail}


@dataclass
class VerificationSummary:
    order_max: int
    trials: int
    seed: int
    generators: int
    passed: dict = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    failed: dict = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": {c: {"passed": self.passed[c], "failed": self.failed[c]} for c in CHECKS},
            "failures": [f.to_dict() for f in self.failures],
        }


def trial_seed(seed: int, generators: int, n: int, trial: int) -> int:
    """Stable 64-bit seed for one (n, trial) cell, independent of run order."""
    return random.Random(f"{seed}/{generators}/{n}/{trial}").getrandbits(64)


def _trial_checks(a: Polynomial, b: Polynomial):
    """Yield ``(check, passed)`` pairs for one pair of random inputs."""
    n = a.order
    A, B = toeplitz.to_toeplitz(a), toeplitz.to_toeplitz(b)
    C = toeplitz.mat_mul(A, B)
    ab = poly_mul(a, b)
    yield "product_invariants", toeplitz.is_valid(C)
    yield "first_row_product", toeplitz.is_valid(C) and toeplitz.from_first_row(C) == ab
    yield "product_homomorphism", C == toeplitz.to_toeplitz(ab)

    u = a - Polynomial({EMPTY_WORD: a.constant_term}, n)
    one_u = Polynomial.one(n) + u
    eu = exp_poly(u)
    lu = log_poly(one_u)
    yield "exp_log_roundtrip", log_poly(eu) == u
    yield "log_exp_roundtrip", exp_poly(lu) == one_u

    E = toeplitz.mat_apply_series(EXP, toeplitz.to_toeplitz(u))
    yield "matrix_exp", (toeplitz.is_valid(E) and toeplitz.from_first_row(E) == eu
                         and toeplitz.mat_apply_series(LOG, E) == toeplitz.to_toeplitz(u))
    L = toeplitz.mat_apply_series(LOG, toeplitz.to_toeplitz(one_u))
    yield "matrix_log", toeplitz.is_valid(L) and toeplitz.from_first_row(L) == lu


def run_verification(order_max: int, trials: int, seed: int, generators: int,
                     density: float = 0.3) -> VerificationSummary:
    if trials < 1 or generators < 1 or order_max < 1:
        raise UsageError("need order_max >= 1, trials >= 1 and generators >= 1")
    summary = VerificationSummary(order_max, trials, seed, generators)
    for n in range(1, order_max + 1):
        for t in range(trials):
            s = trial_seed(seed, generators, n, t)
            a = random_polynomial(s, n, generators, density)
            b = random_polynomial(s + 1, n, generators, density)
            try:
                for check, passed in _trial_checks(a, b):
                    if passed:
                        summary.passed[check] += 1
                    else:
                        summary.failed[check] += 1
                        summary.failures.append(Failure(seed, generators, n, t, check))
            except AlgebraError as exc:
                summary.failures.append(Failure(seed, generators, n, t, "exception", str(exc)))
    return summary

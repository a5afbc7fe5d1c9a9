from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from bchseries.errors import DomainError, UsageError
from bchseries.freealg import EMPTY_WORD, Alphabet, Polynomial, poly_mul, random_polynomial
from bchseries.series import (
    EXP,
    LOG,
    Constraint,
    SeriesFunction,
    apply_composite,
    apply_series,
    exp_poly,
    log_poly,
    polynomial_function,
)

import oracle


def P(text, n):
    return Polynomial.parse(text, n, Alphabet(3))


def without_constant(p):
    return p - Polynomial.constant(p.constant_term, p.order)


seeds = st.integers(min_value=0, max_value=2**32)


def test_exp_single_variable():
    assert exp_poly(P("x", 3)) == P("1 + x + 1/2 xx + 1/6 xxx", 3)
    assert exp_poly(P("x", 2)) == P("1 + x + 1/2 xx", 2)
    assert exp_poly(Polynomial.zero(4)) == Polynomial.one(4)


def test_log_single_variable():
    assert log_poly(P("1 + x", 3)) == P("x - 1/2 xx + 1/3 xxx", 3)
    assert log_poly(P("1 + x", 2)) == P("x - 1/2 xx", 2)
    assert log_poly(Polynomial.one(5)).is_zero()


def test_exp_of_sum_noncommuting():
    # (x + y)^2 expanded by the oracle keeps xy and yx apart
    sq = oracle.mul({"x": 1, "y": 1}, {"x": 1, "y": 1}, 2)
    assert sq == {"xx": 1, "xy": 1, "yx": 1, "yy": 1}
    expected = P("1 + x + y + 1/2 xx + 1/2 xy + 1/2 yx + 1/2 yy", 2)
    assert exp_poly(P("x + y", 2)) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_log_exp_of_sum_roundtrip(n):
    assert log_poly(exp_poly(P("x + y", n))) == P("x + y", n)


def test_domain_errors():
    with pytest.raises(DomainError) as info:
        exp_poly(P("1 + x", 2))
    assert info.value.constraint == "constant_term_zero"
    with pytest.raises(DomainError) as info:
        log_poly(P("x", 2))
    assert info.value.constraint == "constant_term_one"
    with pytest.raises(DomainError):
        log_poly(P("2 + x", 2))


def test_unconstrained_function_needs_degree():
    with pytest.raises(UsageError):
        SeriesFunction("bad", lambda k: 1, Constraint.NONE)


def test_polynomial_function_allows_constant_term():
    f = polynomial_function("1 + 2t + t^2", [1, 2, 1])
    a = P("1 + x", 2)
    # (1 + a)^2 = (2 + x)^2
    assert apply_series(f, a) == P("4 + 4 x + xx", 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_single_variable_reduction(n):
    # over one letter the series is the scalar Maclaurin series coefficient by coefficient
    x = Polynomial.generator(0, n)
    e = exp_poly(x)
    assert [e.coeff((0,) * k) for k in range(n + 1)] == [Fraction(1, factorial(k)) for k in range(n + 1)]
    lg = log_poly(Polynomial.one(n) + x)
    assert [lg.coeff((0,) * k) for k in range(n + 1)] == [0] + [Fraction((-1) ** (k + 1), k) for k in range(1, n + 1)]


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 5), st.integers(1, 3))
def test_roundtrips(seed, n, k):
    u = without_constant(random_polynomial(seed, n, k, 0.4))
    assert log_poly(exp_poly(u)) == u
    one_u = Polynomial.one(n) + u
    assert exp_poly(log_poly(one_u)) == one_u


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 5), st.integers(1, 2))
def test_partial_sums_suffice(seed, n, k):
    # degree-k part of exp(a) only needs powers up to a^k
    a = without_constant(random_polynomial(seed, n, k, 0.5))
    e = exp_poly(a)
    partial = Polynomial.zero(n)
    power = Polynomial.one(n)
    for j in range(n + 1):
        partial = partial + power * Fraction(1, factorial(j))
        assert e.truncate(j) == partial.truncate(j)
        power = poly_mul(power, a)


def test_generic_coefficients_match_geometric_series():
    geom = SeriesFunction("1/(1-t)", lambda k: 1)
    n = 4
    u = P("x + y", n)
    g = apply_series(geom, u)
    # (1 - u) * g = 1 up to order n
    assert poly_mul(Polynomial.one(n) - u, g) == Polynomial.one(n)


def test_apply_composite_reproduces_bch_degree_two():
    z = apply_composite(LOG, EXP, P("x", 2), EXP, P("y", 2))
    assert z == P("x + y + 1/2 xy - 1/2 yx", 2)


def test_apply_composite_checks_outer_domain():
    with pytest.raises(DomainError):
        apply_composite(EXP, EXP, P("x", 2), EXP, P("y", 2))


def test_meter_does_not_change_values():
    from bchseries.metering import MulCounter

    u = without_constant(random_polynomial(4, 4, 2, 0.5))
    meter = MulCounter()
    assert exp_poly(u, meter) == exp_poly(u)
    assert meter.total > 0 and meter.scalar_total > 0
    assert EMPTY_WORD not in log_poly(Polynomial.one(4) + u).terms

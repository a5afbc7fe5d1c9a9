import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from bchseries.errors import DegreeRangeError, UsageError
from bchseries.freealg import (
    EMPTY_WORD,
    Alphabet,
    HomogeneousComponent,
    Polynomial,
    component,
    format_terms,
    poly_add,
    poly_mul,
    random_polynomial,
    scalar_mul,
    word_concat,
)
from bchseries.metering import MulCounter

import oracle

X, Y, Z = (0,), (1,), (2,)


def P(text, n=2, alphabet=Alphabet(3)):
    return Polynomial.parse(text, n, alphabet)


seeds = st.integers(min_value=0, max_value=2**32)


def test_word_concat():
    assert word_concat((0, 1), (0,)) == (0, 1, 0)
    assert word_concat(EMPTY_WORD, Y) == Y
    assert word_concat(X, Y) == (0, 1)
    assert word_concat(Y, X) == (1, 0)
    assert word_concat(X, Y) != word_concat(Y, X)


def test_alphabet_labels():
    assert Alphabet(5).labels == ("x", "y", "z", "g3", "g4")
    a = Alphabet(12)
    assert a.parse_word("xg10g11y") == (0, 10, 11, 1)
    assert a.render((0, 10, 11, 1)) == "xg10g11y"
    with pytest.raises(UsageError):
        Alphabet(0)
    with pytest.raises(UsageError):
        Alphabet(labels=("x", "x"))


def test_polynomial_prunes_and_truncates():
    p = Polynomial({(): 1, X: 0, (0, 0, 0): 5}, order=2)
    assert dict(p.terms) == {(): 1}
    assert Polynomial([(X, 1), (X, -1)], 2).is_zero()


def test_component():
    a = P("1 + x + 1/2 xx")
    assert component(a, 2) == HomogeneousComponent(2, {(0, 0): Fraction(1, 2)})
    assert component(P("1 + x", 5), 5) == HomogeneousComponent(5, {})
    assert dict(component(P("x + y"), 1).terms) == {X: 1, Y: 1}


@pytest.mark.parametrize("degree", [-1, 3])
def test_component_out_of_range(degree):
    with pytest.raises(DegreeRangeError):
        component(P("x"), degree)


def test_poly_add():
    assert poly_add(P("x"), P("y")) == P("x + y")
    assert poly_add(P("x"), P("-x")).is_zero()
    assert poly_add(P("1 + x"), P("1 + y")) == P("2 + x + y")
    with pytest.raises(UsageError):
        poly_add(P("x", 2), P("x", 3))


def test_poly_mul_exponential_product():
    got = poly_mul(P("1 + x + 1/2 xx"), P("1 + y + 1/2 yy"))
    assert got == P("1 + x + y + 1/2 xx + xy + 1/2 yy")


def test_poly_mul_noncommuting_square():
    # oracle: expand the four term pairs of (x + y)(x - y)
    expected = oracle.mul({"x": 1, "y": 1}, {"x": 1, "y": -1}, 2)
    alpha = Alphabet(2)
    assert expected == {"xx": 1, "xy": -1, "yx": 1, "yy": -1}
    assert poly_mul(P("x + y"), P("x - y")) == Polynomial(
        {alpha.parse_word(w): c for w, c in expected.items()}, 2)


def test_poly_mul_identity_and_mismatch():
    a = random_polynomial(7, 3, 2, 0.6)
    assert poly_mul(a, Polynomial.one(3)) == a
    assert poly_mul(Polynomial.one(3), a) == a
    with pytest.raises(UsageError):
        poly_mul(P("x", 2), P("x", 3))


def test_poly_mul_never_forms_overflow_products():
    meter = MulCounter()
    poly_mul(P("x + xx", 2), P("y + yy", 2), meter)
    # only x*y fits in degree 2
    assert dict(meter.per_degree) == {2: 1}


def test_scalar_mul():
    assert scalar_mul(Fraction(1, 2), P("xx")) == P("1/2 xx")
    assert scalar_mul(0, P("1 + x")).is_zero()
    assert scalar_mul(-1, P("x - y")) == P("y - x")


def test_random_polynomial_contract():
    c = random_polynomial(3, 0, 2, 1.0)
    assert list(c.terms) == [EMPTY_WORD] and c.constant_term != 0
    assert random_polynomial(11, 3, 2, 0.4) == random_polynomial(11, 3, 2, 0.4)
    assert len(random_polynomial(5, 2, 2, 1.0)) == 7
    for w, c in random_polynomial(9, 3, 3, 1.0):
        assert 1 <= abs(c.numerator) <= 9 and c.denominator <= 9
    for bad in (0, -0.1, 1.5):
        with pytest.raises(UsageError):
            random_polynomial(1, 2, 2, bad)


def test_format_terms():
    assert format_terms(P("1 + 1/2 xx - 1/6 xyx", 3)) == "+ 1 1 + 1/2 xx - 1/6 xyx"
    assert format_terms(Polynomial.zero(2)) == "0"


def test_iteration_is_deglex():
    p = Polynomial({(1, 0): 1, (0,): 1, (): 1, (0, 1): 1, (1,): 1}, 2)
    assert [w for w, _ in p] == [(), (0,), (1,), (0, 1), (1, 0)]


def test_equality_ignores_order_bookkeeping():
    assert P("x", 2) == P("x", 5)
    assert P("x", 2) != P("y", 2)
    assert hash(P("x + y", 2)) == hash(P("y + x", 2))


def test_noncommutativity_witness():
    assert poly_mul(P("x"), P("y")) != poly_mul(P("y"), P("x"))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 4), st.integers(1, 3))
def test_grading_resums(seed, n, k):
    a = random_polynomial(seed, n, k, 0.5)
    total = Polynomial.zero(n)
    for part in a.components():
        total = poly_add(total, part.to_polynomial(n))
    assert total == a


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 4), st.integers(1, 3))
def test_convolution_degree_law(seed, n, k):
    ab = poly_mul(random_polynomial(seed, n, k, 0.5), random_polynomial(seed + 1, n, k, 0.5))
    for i in range(n + 1):
        assert all(len(w) == i for w, _ in component(ab, i))


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 4), st.integers(1, 3))
def test_associativity_and_distributivity(seed, n, k):
    a, b, c = (random_polynomial(seed + i, n, k, 0.4) for i in range(3))
    assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
    assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 5), st.integers(1, 2), st.data())
def test_truncation_consistency(seed, n, k, data):
    m = data.draw(st.integers(0, n))
    a, b = random_polynomial(seed, n, k, 0.5), random_polynomial(seed + 1, n, k, 0.5)
    assert poly_mul(a.truncate(m), b.truncate(m)) == poly_mul(a, b).truncate(m)


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 4))
def test_poly_mul_matches_brute_force(seed, n):
    alpha = Alphabet(2)
    a, b = random_polynomial(seed, n, 2, 0.5), random_polynomial(seed + 1, n, 2, 0.5)

    def as_strings(p):
        return {alpha.render(w) if w else "": Fraction(int(c.numerator), int(c.denominator)) for w, c in p}

    expected = oracle.mul(as_strings(a), as_strings(b), n)
    assert as_strings(poly_mul(a, b)) == expected
    meter = MulCounter()
    poly_mul(a, b, meter)
    assert meter.as_list(n) == oracle.pair_count(as_strings(a), as_strings(b), n)

"""Truncated polynomials in noncommuting variables with exact rational coefficients.

A word is a tuple of generator indices; the empty tuple is the identity
monomial and ``len(word)`` is its degree.  A :class:`Polynomial` is a sparse
``word -> mpq`` map together with a truncation order ``n``: words of degree
above ``n`` are never stored, and products that would exceed ``n`` are never
formed.

Multiplication takes an optional *meter* (see :class:`bchseries.metering.MulCounter`).
Anything with ``record(degree, count)`` and ``record_scalar(degree, count)``
methods will do; ``None`` disables counting.
"""

from __future__ import annotations

import itertools
import random
import re
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from gmpy2 import mpq

from .errors import DegreeRangeError, UsageError

Word = tuple[int, ...]
EMPTY_WORD: Word = ()

__all__ = [
    "Alphabet",
    "DEFAULT_ALPHABET",
    "EMPTY_WORD",
    "HomogeneousComponent",
    "Polynomial",
    "Word",
    "component",
    "deglex_key",
    "format_coeff",
    "format_terms",
    "parse_rational",
    "poly_add",
    "poly_mul",
    "random_polynomial",
    "rational",
    "scalar_mul",
    "word_concat",
]


def rational(p, q=1) -> mpq:
    """Exact rational ``p/q`` in lowest terms (accepts ints, strings, Fractions, mpq)."""
    return mpq(p) / mpq(q) if q != 1 else mpq(p)


def parse_rational(text: str) -> mpq:
    """Parse ``"p/q"`` or ``"p"``."""
    try:
        return mpq(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def word_concat(u: Word, v: Word) -> Word:
    return u + v


def deglex_key(word: Word):
    return (len(word), word)


class Alphabet:
    """Finite ordered set of generator labels.

    The default labels are ``x``, ``y``, ``z`` followed by ``g3``, ``g4``, ...
    """

    _DEFAULT = ("x", "y", "z")

    def __init__(self, size: int = 3, labels: Iterable[str] | None = None):
        if labels is None:
            if size < 1:
                raise UsageError("alphabet size must be at least 1")
            labels = [self._DEFAULT[i] if i < 3 else f"g{i}" for i in range(size)]
        self.labels = tuple(labels)
        if not self.labels:
            raise UsageError("alphabet size must be at least 1")
        if len(set(self.labels)) != len(self.labels):
            raise UsageError(f"duplicate generator labels in {self.labels}")
        if any(not lab or not lab.isprintable() or lab == "1" or " " in lab for lab in self.labels):
            raise UsageError(f"invalid generator labels {self.labels}")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        # longest label first, so "g10" wins over "g1"
        pattern = "|".join(re.escape(lab) for lab in sorted(self.labels, key=len, reverse=True))
        self._token = re.compile(pattern)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Alphabet({list(self.labels)!r})"

    def index(self, label: str) -> int:
        return self._index[label]

    def render(self, word: Word) -> str:
        if not word:
            return "1"
        return "".join(self.labels[i] for i in word)

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if text in ("", "1"):
            return EMPTY_WORD
        letters = []
        pos = 0
        while pos < len(text):
            m = self._token.match(text, pos)
            if m is None:
                raise UsageError(f"cannot parse word {text!r} over {self.labels}")
            letters.append(self._index[m.group()])
            pos = m.end()
        return tuple(letters)


DEFAULT_ALPHABET = Alphabet(3)


class Polynomial:
    """Immutable truncated element of the free associative algebra over Q.

    Equality compares the coefficient maps only; the truncation order is
    bookkeeping for products.  Terms iterate in degree-lexicographic order.
    """

    __slots__ = ("_terms", "_order", "_by_degree", "_sorted", "_hash")

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = (), order: int = 0):
        if order < 0:
            raise UsageError(f"truncation order must be non-negative, got {order}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, mpq] = {}
        for word, coeff in items:
            word = tuple(word)
            if len(word) > order:
                continue
            acc[word] = acc.get(word, 0) + mpq(coeff)
        self._terms = {w: c for w, c in acc.items() if c != 0}
        self._order = order
        self._by_degree = None
        self._sorted = None
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict, order: int) -> "Polynomial":
        # terms already pruned and within the truncation order
        p = cls.__new__(cls)
        p._terms = terms
        p._order = order
        p._by_degree = None
        p._sorted = None
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, order: int) -> "Polynomial":
        return cls((), order)

    @classmethod
    def constant(cls, value, order: int) -> "Polynomial":
        return cls({EMPTY_WORD: value}, order)

    @classmethod
    def one(cls, order: int) -> "Polynomial":
        return cls.constant(1, order)

    @classmethod
    def generator(cls, index: int, order: int) -> "Polynomial":
        return cls({(index,): 1}, order)

    @classmethod
    def parse(cls, text: str, order: int, alphabet: Alphabet = DEFAULT_ALPHABET) -> "Polynomial":
        """Read ``"1 + x - 1/2 xy + 3 yyx"``-style input (coefficient, then word)."""
        terms = []
        text = text.strip()
        if text in ("", "0"):
            return cls.zero(order)
        for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", text):
            parts = body.split()
            if len(parts) == 1:
                token = parts[0]
                if re.fullmatch(r"\d+(/\d+)?", token):
                    coeff, word = parse_rational(token), EMPTY_WORD
                else:
                    coeff, word = mpq(1), alphabet.parse_word(token)
            elif len(parts) == 2:
                coeff, word = parse_rational(parts[0]), alphabet.parse_word(parts[1])
            else:
                raise UsageError(f"cannot parse term {body!r}")
            terms.append((word, -coeff if sign == "-" else coeff))
        return cls(terms, order)

    # accessors

    @property
    def order(self) -> int:
        return self._order

    @property
    def terms(self) -> Mapping[Word, mpq]:
        """Read-only coefficient map (unordered; iterate the polynomial for deg-lex order)."""
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, mpq]]:
        """Terms in degree-lexicographic order."""
        if self._sorted is None:
            self._sorted = sorted(self._terms.items(), key=lambda t: deglex_key(t[0]))
        return iter(self._sorted)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, word: Word) -> mpq:
        return self._terms.get(tuple(word), mpq(0))

    @property
    def constant_term(self) -> mpq:
        return self._terms.get(EMPTY_WORD, mpq(0))

    def by_degree(self) -> tuple[tuple[tuple[Word, mpq], ...], ...]:
        """Terms grouped by degree: entry ``i`` lists the degree-``i`` terms."""
        if self._by_degree is None:
            groups: list[list] = [[] for _ in range(self._order + 1)]
            for word, c in self._terms.items():
                groups[len(word)].append((word, c))
            self._by_degree = tuple(tuple(g) for g in groups)
        return self._by_degree

    def component(self, degree: int) -> "HomogeneousComponent":
        return component(self, degree)

    def components(self) -> list["HomogeneousComponent"]:
        return [component(self, i) for i in range(self._order + 1)]

    def homogeneous_part(self, degree: int) -> "Polynomial":
        """Degree-``degree`` part as a polynomial at the same truncation order."""
        if not 0 <= degree <= self._order:
            raise DegreeRangeError(f"degree {degree} outside 0..{self._order}")
        return Polynomial._trusted(dict(self.by_degree()[degree]), self._order)

    def is_homogeneous(self, degree: int) -> bool:
        if not self._terms:
            return True
        if self._by_degree is None:
            return all(len(w) == degree for w in self._terms)
        return 0 <= degree <= self._order and len(self._by_degree[degree]) == len(self._terms)

    def truncate(self, order: int) -> "Polynomial":
        return Polynomial(self._terms, order)

    def with_order(self, order: int) -> "Polynomial":
        return self.truncate(order)

    # arithmetic

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, scalar_mul(-1, other))

    def __neg__(self):
        return scalar_mul(-1, self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return scalar_mul(other, self)

    def __rmul__(self, other):
        return scalar_mul(other, self)

    def __repr__(self):
        return f"Polynomial({format_terms(self)!r}, order={self._order})"

    def __str__(self):
        return format_terms(self)


class HomogeneousComponent:
    """All degree-``degree`` terms of some polynomial."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Word, object] = MappingProxyType({})):
        clean = {}
        for word, c in terms.items():
            word = tuple(word)
            if len(word) != degree:
                raise UsageError(f"word {word} has degree {len(word)}, expected {degree}")
            c = mpq(c)
            if c != 0:
                clean[word] = c
        self.degree = degree
        self._terms = {w: clean[w] for w in sorted(clean)}

    @property
    def terms(self) -> Mapping[Word, mpq]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousComponent):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def to_polynomial(self, order: int | None = None) -> Polynomial:
        return Polynomial(self._terms, self.degree if order is None else order)

    def __repr__(self):
        return f"HomogeneousComponent({self.degree}, {format_terms(self)!r})"


def component(a: Polynomial, i: int) -> HomogeneousComponent:
    if not 0 <= i <= a.order:
        raise DegreeRangeError(f"degree {i} outside 0..{a.order}")
    return HomogeneousComponent(i, dict(a.by_degree()[i]))


def _check_orders(a: Polynomial, b: Polynomial) -> int:
    if a.order != b.order:
        raise UsageError(f"truncation orders differ: {a.order} vs {b.order}")
    return a.order


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    n = _check_orders(a, b)
    acc = dict(a._terms)
    for word, c in b._terms.items():
        s = acc.get(word, 0) + c
        if s == 0:
            acc.pop(word, None)
        else:
            acc[word] = s
    return Polynomial._trusted(acc, n)


def poly_mul(a: Polynomial, b: Polynomial, meter=None) -> Polynomial:
    """Truncated product: degree-``i`` part is ``sum_j a_j b_{i-j}`` for ``i <= n``.

    Pairs whose degrees sum past ``n`` are skipped before any product is
    formed.  The meter is charged once per formed term pair, by result degree.
    """
    n = _check_orders(a, b)
    acc: dict[Word, mpq] = {}
    accumulate_product(acc, a, b, meter)
    return from_accumulator(acc, n)


def accumulate_product(acc: dict, a: Polynomial, b: Polynomial, meter=None) -> None:
    """Add the truncated product ``a * b`` into the word->coefficient dict ``acc``."""
    n = a._order
    ga, gb = a.by_degree(), b.by_degree()
    get = acc.get
    for da in range(n + 1):
        ta = ga[da]
        if not ta:
            continue
        for db in range(n - da + 1):
            tb = gb[db]
            if not tb:
                continue
            for wa, ca in ta:
                for wb, cb in tb:
                    w = wa + wb
                    acc[w] = get(w, 0) + ca * cb
            if meter is not None:
                meter.record(da + db, len(ta) * len(tb))


def from_accumulator(acc: dict, order: int) -> Polynomial:
    """Polynomial from a raw accumulator, dropping cancelled terms."""
    return Polynomial._trusted({w: c for w, c in acc.items() if c != 0}, order)


def scalar_mul(q, a: Polynomial, meter=None) -> Polynomial:
    q = mpq(q)
    if meter is not None:
        for word in a._terms:
            meter.record_scalar(len(word), 1)
    if q == 0:
        return Polynomial.zero(a.order)
    return Polynomial._trusted({w: q * c for w, c in a._terms.items()}, a.order)


def random_polynomial(rng_seed: int, n: int, k: int, density: float = 0.5) -> Polynomial:
    """Seeded random polynomial over ``k`` generators truncated at ``n``.

    Uses :class:`random.Random` (Mersenne Twister).  Every word of degree
    ``<= n`` is visited in deg-lex order and kept when ``rng.random() <
    density``; a kept word gets numerator uniform on ``[-9, 9] \\ {0}`` and
    denominator uniform on ``[1, 9]``.
    """
    if not 0 < density <= 1:
        raise UsageError(f"density must lie in (0, 1], got {density}")
    if k < 1 or n < 0:
        raise UsageError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    rng = random.Random(rng_seed)
    numerators = [v for v in range(-9, 10) if v != 0]
    terms = {}
    for degree in range(n + 1):
        for word in itertools.product(range(k), repeat=degree):
            if rng.random() < density:
                terms[word] = mpq(rng.choice(numerators), rng.randint(1, 9))
    return Polynomial(terms, n)


# text rendering


def format_coeff(c, always_fraction: bool = False) -> str:
    """Unsigned ``p/q`` (``p`` alone when ``q == 1`` unless ``always_fraction``)."""
    c = abs(mpq(c))
    if c.denominator == 1 and not always_fraction:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_term(word: Word, c, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
    sign = "-" if c < 0 else "+"
    return f"{sign} {format_coeff(c)} {alphabet.render(word)}"


def format_terms(p, alphabet: Alphabet = DEFAULT_ALPHABET, sep: str = " ") -> str:
    """Plain-text term list, e.g. ``+ 1/2 xx + 1 xy``; ``0`` when empty."""
    items = list(p)
    if not items:
        return "0"
    return sep.join(format_term(w, c, alphabet) for w, c in items)

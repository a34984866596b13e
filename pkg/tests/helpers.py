"""Seeded random generators shared across the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from gsb.poly import Poly
from gsb.words import Word


def random_word(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> Word:
    return tuple(rng.randint(1, n) for _ in range(rng.randint(min_len, max_len)))


def random_poly(
    rng: random.Random,
    n: int,
    max_len: int,
    max_terms: int = 4,
    degree: int | None = None,
) -> Poly:
    """A random polynomial; with degree set, homogeneous of that degree."""
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        if degree is None:
            word = random_word(rng, n, max_len)
        else:
            word = tuple(rng.randint(1, n) for _ in range(degree))
        coef = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        terms.append((word, coef))
    return Poly(terms)


def random_nonzero_poly(
    rng: random.Random, n: int, max_len: int, max_terms: int = 4
) -> Poly:
    while True:
        p = random_poly(rng, n, max_len, max_terms)
        if not p.is_zero:
            return p


def random_binomial_rules(
    rng: random.Random, n: int, max_len: int, count: int
) -> list[Poly]:
    """Random word-difference rules, the shape monoid presentations produce."""
    rules = []
    while len(rules) < count:
        u = random_word(rng, n, max_len, min_len=1)
        v = random_word(rng, n, max_len)
        if u != v:
            rules.append(Poly([(u, 1), (v, -1)]))
    return rules

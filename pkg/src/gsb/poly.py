"""Noncommutative polynomials over the exact rationals.

A polynomial is a finitely supported map from words to nonzero rational
coefficients. Terms are stored sorted deg-lex descending, so the leading
term is positional and equality is structural. All arithmetic is exact;
no floating point is used anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .words import Word, deglex_key, format_word

Scalar = Union[int, Fraction]


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a leading term but the polynomial is zero."""


class PolySyntaxError(ValueError):
    """Raised when polynomial text cannot be parsed."""


class Poly:
    """An immutable noncommutative polynomial with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for word, coef in items:
            c = acc.get(word, 0) + Fraction(coef)
            if c:
                acc[word] = c
            else:
                acc.pop(word, None)
        self._terms: tuple[tuple[Word, Fraction], ...] = tuple(
            sorted(acc.items(), key=lambda t: deglex_key(t[0]), reverse=True)
        )

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls.monomial(())

    @classmethod
    def monomial(cls, word: Word, coef: Scalar = 1) -> Poly:
        return cls(((word, coef),))

    @property
    def terms(self) -> tuple[tuple[Word, Fraction], ...]:
        """Terms as (word, coefficient) pairs, deg-lex descending."""
        return self._terms

    def support(self) -> tuple[Word, ...]:
        return tuple(w for w, _ in self._terms)

    def coefficient(self, word: Word) -> Fraction:
        for w, c in self._terms:
            if w == word:
                return c
        return Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(list(self._terms) + list(other._terms))

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(list(self._terms) + [(w, -c) for w, c in other._terms])

    def __neg__(self) -> Poly:
        return Poly([(w, -c) for w, c in self._terms])

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, Poly):
            return Poly(
                ((u + v, a * b) for u, a in self._terms for v, b in other._terms)
            )
        if isinstance(other, (int, Fraction)):
            return Poly([(w, c * other) for w, c in self._terms])
        return NotImplemented

    def __rmul__(self, other: Scalar) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly([(w, other * c) for w, c in self._terms])
        return NotImplemented

    def lrmul(self, a: Word, b: Word) -> Poly:
        """The product a . self . b with words a and b."""
        return Poly([(a + w + b, c) for w, c in self._terms])

    def leading(self) -> tuple[Word, Fraction]:
        """The deg-lex-greatest supported word and its coefficient."""
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return self._terms[0]

    @property
    def leading_word(self) -> Word:
        return self.leading()[0]

    def monic(self) -> Poly:
        """Scale so the leading coefficient is 1."""
        lw, lc = self.leading()
        if lc == 1:
            return self
        return Poly([(w, c / lc) for w, c in self._terms])

    def degree(self) -> int:
        """Degree of the leading word (maximal supported degree)."""
        return len(self.leading()[0])

    @property
    def is_homogeneous(self) -> bool:
        """True when all supported words share one degree (vacuously for 0)."""
        degrees = {len(w) for w, _ in self._terms}
        return len(degrees) <= 1

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _format_term(word: Word, coef: Fraction) -> str:
    mag = abs(coef)
    if not word:
        return str(mag)
    if mag == 1:
        return format_word(word)
    return f"{mag} * {format_word(word)}"


def format_poly(p: Poly) -> str:
    """Canonical polynomial text: signed ``[coef *] word`` terms, leading first.

    The empty word renders as ``1`` (a bare coefficient).
    """
    if p.is_zero:
        return "0"
    parts = []
    for i, (word, coef) in enumerate(p.terms):
        if i == 0:
            sign = "-" if coef < 0 else ""
        else:
            sign = " - " if coef < 0 else " + "
        parts.append(sign + _format_term(word, coef))
    return "".join(parts)


_RATIONAL = re.compile(r"^\d+(/\d+)?$")
_X_LETTER = re.compile(r"^x(\d+)$")


def _parse_term(tokens: list[str], text: str) -> tuple[Word, Fraction]:
    if not tokens:
        raise PolySyntaxError(f"empty term in {text!r}")
    coef = Fraction(1)
    if _RATIONAL.match(tokens[0]):
        coef = Fraction(tokens[0])
        tokens = tokens[1:]
        if tokens and tokens[0] == "*":
            tokens = tokens[1:]
        if not tokens:
            return (), coef  # bare constant
    if tokens == ["1"]:
        return (), coef  # explicit empty word after a coefficient
    letters = []
    for tok in tokens:
        m = _X_LETTER.match(tok)
        if not m or int(m.group(1)) < 1:
            raise PolySyntaxError(
                f"bad letter {tok!r} in {text!r} (polynomial words use x<k> form)"
            )
        letters.append(int(m.group(1)))
    return tuple(letters), coef


def parse_poly(text: str) -> Poly:
    """Parse polynomial text such as ``x2 x1 - x1 x2`` or ``1/2 * x1 x2 x3 + x2``.

    Terms are separated by top-level + and -. Within a term, an optional
    rational coefficient (``p`` or ``p/q``, optionally followed by ``*``)
    precedes the word, written with ``x<k>`` letters; a bare coefficient or
    the token ``1`` denotes the empty word.
    """
    raw = text.replace("+", " + ").replace("-", " - ").split()
    if not raw:
        raise PolySyntaxError("empty polynomial text")
    if raw[0] not in "+-":
        raw = ["+"] + raw
    terms: list[tuple[Word, Fraction]] = []
    i = 0
    while i < len(raw):
        sign = raw[i]
        j = i + 1
        while j < len(raw) and raw[j] not in "+-":
            j += 1
        word, coef = _parse_term(raw[i + 1 : j], text)
        terms.append((word, -coef if sign == "-" else coef))
        i = j
    return Poly(terms)

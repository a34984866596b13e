"""Words over the generators x_1..x_n and the degree-lexicographic order.

A word is a tuple of 1-based generator indices; the empty tuple is the
identity of the free monoid. Degree-lexicographic (deg-lex) comparison
orders words first by length, then letterwise with x1 < x2 < ... < xn.
This order is monomial: u < v implies a u b < a v b for all words a, b,
which is what makes leading-word rewriting terminate.

Permutations are tuples of images (sigma(1), ..., sigma(n)); the word of
a permutation is exactly its image tuple read as generator indices.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Sequence

Word = tuple[int, ...]
Permutation = tuple[int, ...]


class WordSyntaxError(ValueError):
    """Raised when word text cannot be parsed."""


def deglex_key(w: Word) -> tuple[int, Word]:
    """Sort key realizing the deg-lex order (length first, then letters)."""
    return (len(w), w)


def compare_deglex(u: Word, v: Word) -> int:
    """Compare two words in deg-lex order: -1 if u < v, 0 if equal, 1 if u > v.

    >>> compare_deglex((1,), (1, 1))
    -1
    >>> compare_deglex((2, 1), (1, 2))
    1
    >>> compare_deglex((1, 2, 3), (1, 3, 2))
    -1
    """
    ku, kv = deglex_key(u), deglex_key(v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


def sort_word(w: Word) -> Word:
    """The nondecreasing rearrangement of w's letters.

    >>> sort_word((2, 5, 4, 3, 2, 3))
    (2, 2, 3, 3, 4, 5)
    """
    return tuple(sorted(w))


def find_factor_occurrences(pattern: Word, subject: Word) -> list[int]:
    """All start offsets at which pattern occurs as a factor of subject, ascending.

    >>> find_factor_occurrences((1, 2), (1, 2, 1, 2))
    [0, 2]
    """
    if not pattern:
        raise ValueError("empty pattern has no well-defined occurrences")
    k = len(pattern)
    return [o for o in range(len(subject) - k + 1) if subject[o : o + k] == pattern]


def proper_overlaps(u: Word, v: Word) -> list[int]:
    """Overlap lengths k such that the length-k suffix of u equals the
    length-k prefix of v, with both flanks nonempty in u[:-k] . overlap . v[k:].

    Containments (k equal to the length of either word) are excluded; those
    are inclusion ambiguities, not intersections.

    >>> proper_overlaps((2, 1), (1, 2))
    [1]
    >>> proper_overlaps((2, 1), (2, 1))
    []
    """
    if not u or not v:
        raise ValueError("overlap detection needs nonempty words")
    return [k for k in range(1, min(len(u), len(v))) if u[len(u) - k :] == v[:k]]


def is_permutation(images: Sequence[int]) -> bool:
    """Check that images is a bijection on 1..n where n = len(images)."""
    n = len(images)
    return sorted(images) == list(range(1, n + 1))


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def cyclic_rotation(n: int) -> Permutation:
    """The n-cycle sending 1 -> 2 -> ... -> n -> 1, as an image tuple.

    >>> cyclic_rotation(3)
    (2, 3, 1)
    """
    return tuple(range(2, n + 1)) + (1,)


def enumerate_permutations(n: int) -> list[Permutation]:
    """All n! permutations of 1..n in lexicographic order of image tuples.

    The identity comes first.
    """
    if n < 1:
        raise ValueError("need at least one point to permute")
    return list(itertools.permutations(range(1, n + 1)))


def permutation_word(perm: Permutation) -> Word:
    """The word x_{sigma(1)} x_{sigma(2)} ... x_{sigma(n)} of a permutation.

    >>> permutation_word((2, 3, 1))
    (2, 3, 1)
    """
    if not is_permutation(perm):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {perm!r}")
    return tuple(perm)


_X_TOKEN = re.compile(r"^x(\d+)$")
_INT_TOKEN = re.compile(r"^\d+$")


def parse_word(text: str) -> Word:
    """Parse word text: whitespace-separated tokens, each ``x<k>`` or a bare
    integer. The empty string is the empty word.

    >>> parse_word("x2 x1 x3")
    (2, 1, 3)
    >>> parse_word("2 1 3")
    (2, 1, 3)
    >>> parse_word("")
    ()
    """
    letters = []
    for tok in text.split():
        m = _X_TOKEN.match(tok)
        if m:
            k = int(m.group(1))
        elif _INT_TOKEN.match(tok):
            k = int(tok)
        else:
            raise WordSyntaxError(f"bad word token {tok!r} (expected x<k> or integer)")
        if k < 1:
            raise WordSyntaxError(f"generator index must be >= 1, got {tok!r}")
        letters.append(k)
    return tuple(letters)


def format_word(w: Word) -> str:
    """Canonical word text: ``x<k>`` tokens joined by spaces; empty word -> ''."""
    return " ".join(f"x{k}" for k in w)


def words_of_degree(n: int, degree: int) -> Iterable[Word]:
    """All words of the given degree over x_1..x_n in lex (= deg-lex) order."""
    return itertools.product(range(1, n + 1), repeat=degree)

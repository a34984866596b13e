"""Ground truth for the permutation monoid, independent of the rewriting engine.

Two instruments live here. The congruence oracle enumerates every word of a
fixed length, links each occurrence of a permutation-word factor to the same
word with that factor replaced by x_1 x_2 ... x_n, and takes the union-find
closure; because the relations preserve length, this yields the exact
congruence classes of the monoid on that length stratum. The growth counter
never enumerates words: it walks the factor automaton of the n! permutation
words with big-integer state counts, adding the closed-form count of special
words, so it scales to lengths far beyond the oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial

from .rewrite import FactorAutomaton
from .symn import is_normal_form
from .words import Word, enumerate_permutations, identity_permutation

DEFAULT_ORACLE_BUDGET = 10_000_000


class OracleBudgetError(Exception):
    """The requested enumeration exceeds the budget; no partial answer is given."""


@dataclass(frozen=True)
class ClassPartition:
    """Congruence classes of all words of one length, each class sorted
    ascending, classes ordered by their canonical (least) representative."""

    n: int
    length: int
    classes: tuple[tuple[Word, ...], ...]

    @property
    def representatives(self) -> tuple[Word, ...]:
        return tuple(cls[0] for cls in self.classes)

    def class_of(self, word: Word) -> tuple[Word, ...]:
        for cls in self.classes:
            if word in cls:
                return cls
        raise KeyError(word)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def congruence_classes(
    n: int, length: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> ClassPartition:
    """Exact congruence classes of all n**length words, by brute force."""
    if n < 1 or length < 0:
        raise ValueError("need n >= 1 and length >= 0")
    total = n**length
    if total > budget:
        raise OracleBudgetError(
            f"{n}**{length} = {total} words exceeds the oracle budget {budget}"
        )
    identity = identity_permutation(n)
    parent = list(range(total))

    # letters 1..n map to digits 0..n-1, most significant first
    def encode(word: Word) -> int:
        code = 0
        for c in word:
            code = code * n + (c - 1)
        return code

    for code, word in enumerate(itertools.product(range(1, n + 1), repeat=length)):
        for o in range(length - n + 1):
            window = word[o : o + n]
            if len(set(window)) != n or window == identity:
                continue
            other = encode(word[:o] + identity + word[o + n :])
            ra, rb = _find(parent, code), _find(parent, other)
            if ra != rb:
                parent[ra] = rb

    groups: dict[int, list[Word]] = {}
    for code, word in enumerate(itertools.product(range(1, n + 1), repeat=length)):
        groups.setdefault(_find(parent, code), []).append(word)
    classes = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda c: c[0])
    return ClassPartition(n=n, length=length, classes=tuple(classes))


@dataclass(frozen=True)
class UniquenessReport:
    """Per-class count of normal-form words; pass means exactly one each."""

    n: int
    length: int
    class_count: int
    bad_classes: tuple[tuple[tuple[Word, ...], int], ...]  # (class, nf count)
    canonical_mismatches: tuple[Word, ...]  # least reps that are not normal forms

    @property
    def passed(self) -> bool:
        return not self.bad_classes


def check_unique_normal_forms(
    n: int, length: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> UniquenessReport:
    """Assert every congruence class holds exactly one closed-form normal
    word; classes with zero or several are reported, not silently dropped."""
    partition = congruence_classes(n, length, budget=budget)
    bad: list[tuple[tuple[Word, ...], int]] = []
    mismatches: list[Word] = []
    for cls in partition.classes:
        count = sum(1 for w in cls if is_normal_form(w, n))
        if count != 1:
            bad.append((cls, count))
        if not is_normal_form(cls[0], n):
            mismatches.append(cls[0])
    return UniquenessReport(
        n=n,
        length=length,
        class_count=len(partition.classes),
        bad_classes=tuple(bad),
        canonical_mismatches=tuple(mismatches),
    )


@dataclass(frozen=True)
class GrowthSeries:
    """Counts per length: factor-avoiding words, special words, and totals."""

    n: int
    max_length: int
    avoiders: tuple[int, ...]
    special: tuple[int, ...]

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(a + s for a, s in zip(self.avoiders, self.special))

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [
            (length, self.avoiders[length], self.special[length], self.totals[length])
            for length in range(self.max_length + 1)
        ]


def count_normal_forms(n: int, max_length: int) -> GrowthSeries:
    """Growth of the normal-form count, without enumerating words.

    Avoider counts come from iterating the factor automaton of all n!
    permutation words (exact integers; these overflow 64 bits quickly).
    Special words x_1^{m_1} x_e x_2^{m_2} ... x_n^{m_n} of length L >= n
    are counted by compositions: comb(L - 1, n - 1).
    """
    if n < 1 or max_length < 0:
        raise ValueError("need n >= 1 and max_length >= 0")
    patterns = [tuple(p) for p in enumerate_permutations(n)]
    assert len(patterns) == factorial(n)
    automaton = FactorAutomaton(patterns)
    alive = [s for s in range(automaton.num_states) if not automaton.is_matched(s)]
    counts = {0: 1}
    avoiders = [1]
    for _ in range(max_length):
        nxt: dict[int, int] = {}
        for state, count in counts.items():
            for letter in range(1, n + 1):
                target = automaton.advance(state, letter)
                if not automaton.is_matched(target):
                    nxt[target] = nxt.get(target, 0) + count
        counts = nxt
        avoiders.append(sum(counts.values()))
    assert set(counts) <= set(alive)
    special = [comb(length - 1, n - 1) if length >= n else 0 for length in range(max_length + 1)]
    return GrowthSeries(
        n=n, max_length=max_length, avoiders=tuple(avoiders), special=tuple(special)
    )

"""Reduction of polynomials modulo a set of monic rules.

A basis is an ordered set of monic polynomials whose leading words act as
left-hand sides of rewriting rules: an occurrence a . lw . b of a leading
word lw inside a supported word is replaced through p -> p - c * a * rule * b,
which cancels that occurrence and introduces only deg-lex-smaller words.
Occurrences are located with a multi-pattern factor automaton (Aho-Corasick)
built over all leading words.

Reduction uses a fixed deterministic strategy, so normal forms are
reproducible whether or not the basis is closed under compositions;
confluence itself is certified elsewhere (see compose / complete).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .poly import Poly
from .words import Word, deglex_key


class FactorAutomaton:
    """Aho-Corasick automaton reporting all factor occurrences of a pattern set.

    Patterns are nonempty words over positive integer letters. State 0 is the
    root. A state is *matched* when some pattern ends there or at a state on
    its failure chain; walks that avoid matched states spell exactly the words
    avoiding every pattern as a factor.
    """

    def __init__(self, patterns: Sequence[Word]):
        if any(not p for p in patterns):
            raise ValueError("patterns must be nonempty words")
        self.patterns = tuple(patterns)
        self._goto: list[dict[int, int]] = [{}]
        self._fail: list[int] = [0]
        self._out: list[tuple[int, ...]] = [()]
        for pid, pattern in enumerate(self.patterns):
            state = 0
            for letter in pattern:
                nxt = self._goto[state].get(letter)
                if nxt is None:
                    nxt = len(self._goto)
                    self._goto[state][letter] = nxt
                    self._goto.append({})
                    self._fail.append(0)
                    self._out.append(())
                state = nxt
            self._out[state] = self._out[state] + (pid,)
        self._build_links()

    def _build_links(self) -> None:
        queue: deque[int] = deque()
        for child in self._goto[0].values():
            queue.append(child)
        while queue:
            state = queue.popleft()
            for letter, child in self._goto[state].items():
                queue.append(child)
                f = self._fail[state]
                while f and letter not in self._goto[f]:
                    f = self._fail[f]
                target = self._goto[f].get(letter, 0)
                self._fail[child] = target if target != child else 0
                # inherit matches ending at the failure target
                self._out[child] = self._out[child] + self._out[self._fail[child]]

    @property
    def num_states(self) -> int:
        return len(self._goto)

    def advance(self, state: int, letter: int) -> int:
        while state and letter not in self._goto[state]:
            state = self._fail[state]
        return self._goto[state].get(letter, 0)

    def is_matched(self, state: int) -> bool:
        return bool(self._out[state])

    def scan(self, word: Word) -> Iterator[tuple[int, int]]:
        """Yield (start_offset, pattern_id) for every occurrence in word."""
        state = 0
        for end, letter in enumerate(word, start=1):
            state = self.advance(state, letter)
            for pid in self._out[state]:
                yield end - len(self.patterns[pid]), pid


class BasisBuilder:
    """Mutable accumulator enforcing monic rules with pairwise distinct
    leading words.

    Insertion normalizes to monic form; a newcomer whose leading word is
    already taken is replaced by its difference with the incumbent (which has
    a strictly smaller leading word) and reinserted, so duplicates melt away.
    """

    def __init__(self, rules: Iterable[Poly] = ()):
        self.rules: list[Poly] = []
        self._by_lead: dict[Word, int] = {}
        for rule in rules:
            self.insert(rule)

    def __len__(self) -> int:
        return len(self.rules)

    def insert(self, rule: Poly) -> Poly | None:
        """Add a rule; returns the polynomial actually committed, or None when
        the newcomer cancelled against incumbents."""
        if rule.is_zero:
            raise ValueError("cannot insert the zero polynomial as a rule")
        p = rule.monic()
        while True:
            lw = p.leading_word
            i = self._by_lead.get(lw)
            if i is None:
                self._by_lead[lw] = len(self.rules)
                self.rules.append(p)
                return p
            p = p - self.rules[i]
            if p.is_zero:
                return None
            p = p.monic()

    def freeze(self, alphabet_size: int | None = None) -> Basis:
        return Basis(self.rules, alphabet_size=alphabet_size)


class Basis:
    """An immutable rule set with a factor index over its leading words."""

    def __init__(self, rules: Iterable[Poly], alphabet_size: int | None = None):
        builder_rules = BasisBuilder(rules).rules
        self.rules: tuple[Poly, ...] = tuple(builder_rules)
        self.leading_words: tuple[Word, ...] = tuple(r.leading_word for r in self.rules)
        # a constant rule (empty leading word) reduces everything to 0 and
        # cannot live in the automaton; it is tracked separately
        self._constant_rule_id: int | None = None
        indexed: list[tuple[int, Word]] = []
        for rid, lw in enumerate(self.leading_words):
            if lw:
                indexed.append((rid, lw))
            else:
                self._constant_rule_id = rid
        self._index_ids = tuple(rid for rid, _ in indexed)
        self._automaton = FactorAutomaton(tuple(lw for _, lw in indexed))
        inferred = max((max(lw) for lw in self.leading_words if lw), default=0)
        if alphabet_size is not None and alphabet_size < inferred:
            raise ValueError(
                f"alphabet_size {alphabet_size} below largest generator {inferred}"
            )
        self.alphabet_size = inferred if alphabet_size is None else alphabet_size
        self._irreducible_cache: set[Word] = set()

    def __len__(self) -> int:
        return len(self.rules)

    @property
    def automaton(self) -> FactorAutomaton:
        return self._automaton

    def occurrences(self, word: Word) -> list[tuple[int, int]]:
        """All (start_offset, rule_id) with the rule's leading word a factor
        of word at that offset."""
        hits = [(start, self._index_ids[pid]) for start, pid in self._automaton.scan(word)]
        if self._constant_rule_id is not None:
            hits.append((0, self._constant_rule_id))
        return hits

    def is_reducible(self, word: Word) -> bool:
        if word in self._irreducible_cache:
            return False
        if self._constant_rule_id is not None:
            return True
        state = 0
        for letter in word:
            state = self._automaton.advance(state, letter)
            if self._automaton.is_matched(state):
                return True
        self._irreducible_cache.add(word)
        return False


def build_basis(rules: Iterable[Poly], alphabet_size: int | None = None) -> Basis:
    """Monic-normalize, dedupe by leading word, and index the given rules."""
    return Basis(rules, alphabet_size=alphabet_size)


@dataclass(frozen=True)
class ReductionStep:
    """One rewrite: the word rewritten, where, by which rule, with what weight."""

    rule_id: int
    position: int
    word: Word
    coefficient: Fraction


@dataclass(frozen=True)
class ReductionTrace:
    """Certificate that input - terminal = sum of coefficient * a * rule * b
    over the recorded steps."""

    steps: tuple[ReductionStep, ...]
    terminal: Poly

    def replay(self, start: Poly, basis: Basis) -> Poly:
        """Re-apply every step to start; equals terminal iff the trace is sound."""
        p = start
        for step in self.steps:
            rule = basis.rules[step.rule_id]
            a = step.word[: step.position]
            b = step.word[step.position + len(rule.leading_word) :]
            p = p - step.coefficient * rule.lrmul(a, b)
        return p


def _select_occurrence(basis: Basis, word: Word) -> tuple[int, int]:
    """Leftmost occurrence; ties broken by deg-lex-greatest leading word."""
    hits = basis.occurrences(word)
    leftmost = min(start for start, _ in hits)
    rid = max(
        (r for start, r in hits if start == leftmost),
        key=lambda r: deglex_key(basis.leading_words[r]),
    )
    return leftmost, rid


def reduce_step(p: Poly, basis: Basis) -> tuple[Poly, ReductionStep] | None:
    """Apply one rewrite to the deg-lex-greatest reducible supported word of p,
    at its leftmost reducible position, with the greatest matching rule.

    Returns None when p is already in normal form.
    """
    for word, coef in p.terms:
        if not basis.is_reducible(word):  # cached across calls
            continue
        position, rid = _select_occurrence(basis, word)
        rule = basis.rules[rid]
        a = word[:position]
        b = word[position + len(rule.leading_word) :]
        step = ReductionStep(rule_id=rid, position=position, word=word, coefficient=coef)
        return p - coef * rule.lrmul(a, b), step
    return None


def normal_form(
    p: Poly, basis: Basis, want_trace: bool = False
) -> Poly | tuple[Poly, ReductionTrace]:
    """Reduce p to its normal form modulo the basis.

    Every supported word of the result avoids all leading words as factors,
    and p - result lies in the two-sided ideal generated by the rules. With
    want_trace, also return the step-by-step certificate.
    """
    steps: list[ReductionStep] = []
    current = p
    while True:
        nxt = reduce_step(current, basis)
        if nxt is None:
            break
        current, step = nxt
        if want_trace:
            steps.append(step)
    if want_trace:
        return current, ReductionTrace(steps=tuple(steps), terminal=current)
    return current


def irreducible_words(basis: Basis, length: int) -> list[Word]:
    """All words of the given degree containing no leading word of the basis
    as a factor, in deg-lex (here: lex) ascending order.

    Walks the factor automaton depth-first, pruning at matched states, so
    the cost is proportional to the survivor tree rather than alphabet**length.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if basis._constant_rule_id is not None:
        return []
    n = basis.alphabet_size
    auto = basis.automaton
    out: list[Word] = []
    if length == 0:
        return [()]

    def walk(prefix: list[int], state: int) -> None:
        depth = len(prefix)
        for letter in range(1, n + 1):
            nxt = auto.advance(state, letter)
            if auto.is_matched(nxt):
                continue
            prefix.append(letter)
            if depth + 1 == length:
                out.append(tuple(prefix))
            else:
                walk(prefix, nxt)
            prefix.pop()

    walk([], 0)
    return out

"""The symmetric-type permutation monoid and its rewriting system.

The monoid under study has generators x_1..x_n and one relation per
permutation: every product x_{s(1)} x_{s(2)} ... x_{s(n)} equals
x_1 x_2 ... x_n. Orienting the relations by deg-lex gives the defining
rules. Those rules alone are not closed under composition; the closure is
the five-family rule set built here (truncated at a degree bound, since
three of the families are infinite):

  family 1   x_s - x_e                       for every non-identity s
  family 2   x_i x_e - x_e x_i               2 <= i <= n
  family 3   x_i x_1^m x_e - x_1^m x_e x_i   m >= 1
  family 4   x_e u - x_e sort(u)             u over letters 2..n, |u| >= 2,
                                             u unsorted
  family 5   x_e u x_1 - x_1 x_e u           u over letters 2..n, |u| >= 1

where x_e = x_1 x_2 ... x_n and x_s is the word of the permutation s.
Because every rule is homogeneous, no rule or composition of degree above
the bound can touch words of degree within it, so a bounded certification
is exact for all word lengths up to the bound.

Normal forms admit a closed description: the words avoiding every
permutation word as a factor, together with the special words
x_1^{m_1} x_e x_2^{m_2} ... x_n^{m_n}.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .complete import DEFAULT_BUDGET, CompletionReport, shirshov_complete
from .compose import CompositionResult, check_trivial, check_trivial_many, enumerate_ambiguities
from .poly import Poly
from .rewrite import Basis, build_basis, normal_form
from .words import (
    Word,
    enumerate_permutations,
    identity_permutation,
    permutation_word,
    sort_word,
    words_of_degree,
)

@dataclass(frozen=True)
class SymRule:
    """A rule tagged with its family (1..5) and generating parameters."""

    family: int
    params: tuple[int, ...]
    poly: Poly


def identity_word(n: int) -> Word:
    return permutation_word(identity_permutation(n))


def defining_rules(n: int) -> list[Poly]:
    """The oriented defining relations: one monic rule x_s - x_e per
    non-identity permutation s, in lexicographic order of s."""
    if n < 2:
        raise ValueError("need n >= 2 (a single generator leaves no relations)")
    e = identity_word(n)
    return [
        Poly([(permutation_word(s), 1), (e, -1)])
        for s in enumerate_permutations(n)[1:]
    ]


def saturated_rules(n: int, degree_bound: int) -> tuple[Basis, tuple[SymRule, ...]]:
    """The five-family rule set truncated at the degree bound, as an indexed
    basis plus the family-tagged rules aligned with the basis rule ids."""
    if n < 2:
        raise ValueError("need n >= 2")
    if degree_bound < n + 1:
        raise ValueError(f"degree bound must be at least n + 1 = {n + 1}")
    e = identity_word(n)
    high = range(2, n + 1)
    rules: list[SymRule] = []

    for s in enumerate_permutations(n)[1:]:
        w = permutation_word(s)
        rules.append(SymRule(1, tuple(s), Poly([(w, 1), (e, -1)])))
    for i in high:
        rules.append(SymRule(2, (i,), Poly([((i,) + e, 1), (e + (i,), -1)])))
    for m in range(1, degree_bound - n):
        ones = (1,) * m
        for i in high:
            rules.append(
                SymRule(3, (i, m), Poly([((i,) + ones + e, 1), (ones + e + (i,), -1)]))
            )
    for length in range(2, degree_bound - n + 1):
        for u in itertools.product(high, repeat=length):
            su = sort_word(u)
            if u > su:
                rules.append(SymRule(4, u, Poly([(e + u, 1), (e + su, -1)])))
    for m in range(1, degree_bound - n):
        for u in itertools.product(high, repeat=m):
            rules.append(
                SymRule(5, u, Poly([(e + u + (1,), 1), ((1,) + e + u, -1)]))
            )

    basis = build_basis([r.poly for r in rules], alphabet_size=n)
    if len(basis.rules) != len(rules):
        raise AssertionError("family rules unexpectedly collided by leading word")
    for rule, sym in zip(basis.rules, rules):
        assert rule.leading_word == sym.poly.leading_word
    return basis, tuple(rules)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking every composition of a rule set below a bound.

    unchecked counts ambiguities left unexamined by an early stop; a full
    scan has unchecked == 0.
    """

    degree_bound: int
    checked: int
    skipped_beyond_bound: int
    nontrivial: tuple[CompositionResult, ...]
    pair_counts: dict[tuple[int, int], int] | None
    nontrivial_pair_counts: dict[tuple[int, int], int] | None
    unchecked: int = 0
    n: int | None = None

    @property
    def passed(self) -> bool:
        return not self.nontrivial

    @property
    def complete_scan(self) -> bool:
        return self.unchecked == 0

    @property
    def total_enumerated(self) -> int:
        return self.checked + self.unchecked + self.skipped_beyond_bound


def certify_rules(
    basis: Basis,
    degree_bound: int,
    families: Sequence[int] | None = None,
    jobs: int = 1,
    stop_at_first_failure: bool = False,
) -> VerificationReport:
    """Check that every composition of the basis with |w| <= degree_bound
    reduces to zero. With families (one tag per rule id), the report groups
    checked and failing counts by the (family of f, family of g) pair."""
    ambiguities, skipped = enumerate_ambiguities(basis, degree_bound)
    if stop_at_first_failure:
        results: list[CompositionResult] = []
        for amb in ambiguities:
            res = check_trivial(amb, basis)
            results.append(res)
            if not res.trivial:
                break
    else:
        results = check_trivial_many(ambiguities, basis, jobs=jobs)

    pair_counts: dict[tuple[int, int], int] | None = None
    bad_pairs: dict[tuple[int, int], int] | None = None
    if families is not None:
        pair_counts = {}
        bad_pairs = {}
        for res in results:
            pair = (families[res.ambiguity.f_id], families[res.ambiguity.g_id])
            pair_counts[pair] = pair_counts.get(pair, 0) + 1
            if not res.trivial:
                bad_pairs[pair] = bad_pairs.get(pair, 0) + 1
    return VerificationReport(
        degree_bound=degree_bound,
        checked=len(results),
        skipped_beyond_bound=skipped,
        nontrivial=tuple(r for r in results if not r.trivial),
        pair_counts=pair_counts,
        nontrivial_pair_counts=bad_pairs,
        unchecked=len(ambiguities) - len(results),
        n=None,
    )


def certify_basis(n: int, degree_bound: int, jobs: int = 1) -> VerificationReport:
    """Verify that the five-family rules are closed under composition below
    the bound: every ambiguity with |w| <= degree_bound must be trivial."""
    if degree_bound < n + 2:
        raise ValueError(f"degree bound must be at least n + 2 = {n + 2}")
    basis, sym_rules = saturated_rules(n, degree_bound)
    report = certify_rules(
        basis,
        degree_bound,
        families=[r.family for r in sym_rules],
        jobs=jobs,
    )
    return dataclasses.replace(report, n=n)


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of checking the five-family rules against the completed
    defining rules: every family rule must reduce to zero, which places it
    in the two-sided ideal the defining relations generate."""

    n: int
    degree_bound: int
    status: str  # "pass" | "fail" | "inconclusive"
    completion: CompletionReport
    failures: tuple[tuple[SymRule, Poly], ...] = field(default_factory=tuple)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def certify_membership(
    n: int, degree_bound: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> MembershipReport:
    """Complete the defining rules below the bound, then reduce every
    five-family rule to zero against the completed basis. A budget-exhausted
    completion makes the result inconclusive rather than a failure."""
    if degree_bound < n + 1:
        raise ValueError(f"degree bound must be at least n + 1 = {n + 1}")
    completion = shirshov_complete(
        defining_rules(n), degree_bound, budget=budget, jobs=jobs, alphabet_size=n
    )
    if not completion.closed:
        return MembershipReport(
            n=n, degree_bound=degree_bound, status="inconclusive", completion=completion
        )
    _, sym_rules = saturated_rules(n, degree_bound)
    failures = []
    for sym in sym_rules:
        remainder = normal_form(sym.poly, completion.basis)
        if not remainder.is_zero:
            failures.append((sym, remainder))
    return MembershipReport(
        n=n,
        degree_bound=degree_bound,
        status="pass" if not failures else "fail",
        completion=completion,
        failures=tuple(failures),
        checked=len(sym_rules),
    )


def is_normal_form(word: Word, n: int) -> bool:
    """Membership in the closed-form description of normal forms: either no
    length-n factor of the word uses all n generators (so no permutation word
    occurs, the identity word included), or the word has the special shape
    x_1^{m_1} x_e x_2^{m_2} ... x_n^{m_n}."""
    if any(not 1 <= c <= n for c in word):
        raise ValueError(f"letters out of range 1..{n}: {word}")
    if not any(len(set(word[o : o + n])) == n for o in range(len(word) - n + 1)):
        return True
    ones = 0
    while ones < len(word) and word[ones] == 1:
        ones += 1
    if ones == 0 or word[ones : ones + n - 1] != tuple(range(2, n + 1)):
        return False
    rest = word[ones + n - 1 :]
    return all(c >= 2 for c in rest) and all(
        rest[j] <= rest[j + 1] for j in range(len(rest) - 1)
    )


def enumerate_normal_forms(n: int, length: int) -> list[Word]:
    """All normal-form words of the given degree, deg-lex ascending."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    return [w for w in words_of_degree(n, length) if is_normal_form(w, n)]

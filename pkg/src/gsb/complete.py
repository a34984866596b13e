"""Degree-bounded completion: saturate a rule set under compositions.

Each round enumerates every ambiguity of the current basis up to the degree
bound in ascending w order, reduces all compositions against that fixed
basis, then commits the monic nonzero remainders (deduplicated by leading
word) as new rules. The loop ends when a full round finds nothing to add:
every composition below the bound then reduces to zero against the final
basis, which is the degree-filtered closure property used downstream.

The bound is mandatory because completion need not terminate unbounded; the
rule budget guards against blow-up below the bound and is reported as an
outcome, not raised as an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .compose import Ambiguity, check_trivial, check_trivial_many, enumerate_ambiguities
from .poly import Poly
from .rewrite import Basis, BasisBuilder, build_basis

STATUS_CLOSED = "closed_below_bound"
STATUS_BUDGET = "budget_exhausted"

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class AddedRule:
    """A committed completion rule and the ambiguity it came from."""

    round_no: int
    ambiguity: Ambiguity
    rule: Poly


@dataclass(frozen=True)
class CompletionReport:
    basis: Basis
    rounds: int
    added: tuple[AddedRule, ...]
    skipped_beyond_bound: int
    status: str

    @property
    def closed(self) -> bool:
        return self.status == STATUS_CLOSED


def shirshov_complete(
    rules: Sequence[Poly],
    degree_bound: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    alphabet_size: int | None = None,
) -> CompletionReport:
    """Saturate the rules below the degree bound.

    Requires the bound to cover every input leading word and the budget to
    cover the input size. The final basis generates the same two-sided ideal
    as the input: every added rule is a reduced composition of earlier rules,
    and its provenance can be replayed (see replay_added_rule).
    """
    max_lead = max((r.monic().degree() for r in rules), default=0)
    if degree_bound < max_lead:
        raise ValueError(
            f"degree bound {degree_bound} below largest input leading degree {max_lead}"
        )
    if budget < len(rules):
        raise ValueError(f"budget {budget} below input size {len(rules)}")

    builder = BasisBuilder(rules)
    added: list[AddedRule] = []
    rounds = 0
    while True:
        basis = builder.freeze(alphabet_size=alphabet_size)
        ambiguities, skipped = enumerate_ambiguities(basis, degree_bound)
        rounds += 1
        results = check_trivial_many(ambiguities, basis, jobs=jobs)
        pending = [r for r in results if not r.trivial]
        if not pending:
            return CompletionReport(
                basis=basis,
                rounds=rounds,
                added=tuple(added),
                skipped_beyond_bound=skipped,
                status=STATUS_CLOSED,
            )
        for result in pending:
            if len(builder) >= budget:
                return CompletionReport(
                    basis=builder.freeze(alphabet_size=alphabet_size),
                    rounds=rounds,
                    added=tuple(added),
                    skipped_beyond_bound=skipped,
                    status=STATUS_BUDGET,
                )
            committed = builder.insert(result.remainder.monic())
            if committed is not None:
                added.append(
                    AddedRule(round_no=rounds, ambiguity=result.ambiguity, rule=committed)
                )


def replay_added_rule(
    initial_rules: Sequence[Poly], report: CompletionReport, index: int
) -> Poly | None:
    """Recompute added rule `index` from its provenance.

    Rebuilds the basis as it stood at the start of the rule's round, re-reduces
    the recorded ambiguity's composition, and re-commits against the rules
    added before it. Equality with report.added[index].rule certifies both
    determinism and membership of the rule in the ideal of its predecessors.
    """
    target = report.added[index]
    round_start = [a.rule for a in report.added if a.round_no < target.round_no]
    basis = build_basis(list(initial_rules) + round_start)
    remainder = check_trivial(target.ambiguity, basis).remainder
    if remainder.is_zero:
        return None
    replay_builder = BasisBuilder(
        list(initial_rules) + [a.rule for a in report.added[:index]]
    )
    return replay_builder.insert(remainder.monic())

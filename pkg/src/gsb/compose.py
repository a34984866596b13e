"""Critical pairs of a basis: ambiguities, compositions, triviality checks.

Two rules f and g interact in two ways. An intersection ambiguity is a word
w = lead(f) . b = a . lead(g) where a nonempty suffix of lead(f) equals a
prefix of lead(g) and both flanks a, b are nonempty; the composition is
f . b - a . g. An inclusion ambiguity is w = lead(f) = a . lead(g) . b with
lead(g) a factor of lead(f); the composition is f - a . g . b. In both
cases the leading occurrences of w cancel, so every supported word of the
composition is strictly below w. A composition is trivial when it reduces
to zero; the reduction trace is then a certificate using only words below w.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Sequence

from .poly import Poly
from .rewrite import Basis, ReductionTrace, normal_form
from .words import Word, deglex_key

INTERSECTION = "intersection"
INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    """An overlap witness: w = lead(f).b = a.lead(g) (intersection, a and b
    nonempty) or w = lead(f) = a.lead(g).b (inclusion)."""

    kind: str
    f_id: int
    g_id: int
    w: Word
    a: Word
    b: Word

    def sort_key(self) -> tuple:
        return (deglex_key(self.w), self.f_id, self.g_id, len(self.a), self.kind)


@dataclass(frozen=True)
class CompositionResult:
    ambiguity: Ambiguity
    composition: Poly
    remainder: Poly
    trivial: bool
    trace: ReductionTrace


def enumerate_ambiguities(
    basis: Basis, max_w_degree: int
) -> tuple[list[Ambiguity], int]:
    """All ambiguities of the basis with |w| <= max_w_degree, deterministically
    ordered by (w deg-lex, f_id, g_id, offset); plus the count of ambiguities
    beyond the bound, which are skipped rather than silently dropped.

    Intersections cover every ordered rule pair including self-pairs; the
    degenerate self-inclusion of a rule in itself is excluded (its
    composition is identically zero).
    """
    if max_w_degree < 0:
        raise ValueError("degree bound must be nonnegative")
    leads = basis.leading_words
    out: list[Ambiguity] = []
    skipped = 0

    # prefix index: every proper prefix of every leading word
    prefix_index: dict[Word, list[int]] = {}
    for gid, lw in enumerate(leads):
        for k in range(1, len(lw)):
            prefix_index.setdefault(lw[:k], []).append(gid)

    for fid, fw in enumerate(leads):
        # intersections: proper suffix of lead(f) = proper prefix of lead(g)
        for k in range(1, len(fw)):
            for gid in prefix_index.get(fw[len(fw) - k :], ()):
                gw = leads[gid]
                w = fw + gw[k:]
                if len(w) > max_w_degree:
                    skipped += 1
                    continue
                out.append(
                    Ambiguity(
                        kind=INTERSECTION,
                        f_id=fid,
                        g_id=gid,
                        w=w,
                        a=fw[: len(fw) - k],
                        b=gw[k:],
                    )
                )
        # inclusions: some other leading word strictly inside lead(f)
        for start, gid in basis.occurrences(fw):
            if gid == fid:
                continue
            gw = leads[gid]
            if len(fw) > max_w_degree:
                skipped += 1
                continue
            out.append(
                Ambiguity(
                    kind=INCLUSION,
                    f_id=fid,
                    g_id=gid,
                    w=fw,
                    a=fw[:start],
                    b=fw[start + len(gw) :],
                )
            )
    out.sort(key=Ambiguity.sort_key)
    return out, skipped


def _validate(amb: Ambiguity, basis: Basis) -> tuple[Poly, Poly]:
    try:
        f = basis.rules[amb.f_id]
        g = basis.rules[amb.g_id]
    except IndexError as exc:
        raise ValueError(f"ambiguity references missing rule: {amb}") from exc
    fw, gw = f.leading_word, g.leading_word
    if amb.kind == INTERSECTION:
        ok = (
            amb.a
            and amb.b
            and amb.w == fw + amb.b
            and amb.w == amb.a + gw
            and len(fw) + len(gw) > len(amb.w)
        )
    elif amb.kind == INCLUSION:
        ok = amb.w == fw and amb.w == amb.a + gw + amb.b
    else:
        ok = False
    if not ok:
        raise ValueError(f"ambiguity inconsistent with basis: {amb}")
    return f, g


def composition(amb: Ambiguity, basis: Basis) -> Poly:
    """The composition polynomial of an ambiguity; all of its supported words
    lie strictly below w, which is asserted on every instance."""
    f, g = _validate(amb, basis)
    if amb.kind == INTERSECTION:
        result = f.lrmul((), amb.b) - g.lrmul(amb.a, ())
    else:
        result = f - g.lrmul(amb.a, amb.b)
    wkey = deglex_key(amb.w)
    assert all(
        deglex_key(word) < wkey for word in result.support()
    ), f"composition supports a word not below its ambiguity: {amb}"
    return result


def check_trivial(amb: Ambiguity, basis: Basis) -> CompositionResult:
    """Reduce the composition; trivial iff the remainder is zero. The trace
    witnesses the certificate, every rewritten word lying below w."""
    comp = composition(amb, basis)
    remainder, trace = normal_form(comp, basis, want_trace=True)
    wkey = deglex_key(amb.w)
    assert all(deglex_key(s.word) < wkey for s in trace.steps)
    return CompositionResult(
        ambiguity=amb,
        composition=comp,
        remainder=remainder,
        trivial=remainder.is_zero,
        trace=trace,
    )


# -- parallel checking ------------------------------------------------------
# Workers hold the basis once (fork + initializer) instead of per task.

_WORKER_BASIS: Basis | None = None


def _init_worker(basis: Basis) -> None:
    global _WORKER_BASIS
    _WORKER_BASIS = basis


def _check_one(amb: Ambiguity) -> CompositionResult:
    assert _WORKER_BASIS is not None
    return check_trivial(amb, _WORKER_BASIS)


def check_trivial_many(
    ambiguities: Sequence[Ambiguity], basis: Basis, jobs: int = 1
) -> list[CompositionResult]:
    """check_trivial over many ambiguities, results in input order.

    With jobs > 1 the checks run in a process pool; any pool setup failure
    falls back to the serial path, which is always equivalent.
    """
    if jobs <= 1 or len(ambiguities) < 64:
        return [check_trivial(a, basis) for a in ambiguities]
    try:
        with multiprocessing.Pool(jobs, _init_worker, (basis,)) as pool:
            chunk = max(1, len(ambiguities) // (jobs * 8))
            return pool.map(_check_one, ambiguities, chunksize=chunk)
    except OSError:
        return [check_trivial(a, basis) for a in ambiguities]

import random

import pytest

from gsb.compose import (
    INCLUSION,
    INTERSECTION,
    Ambiguity,
    check_trivial,
    check_trivial_many,
    composition,
    enumerate_ambiguities,
)
from gsb.poly import parse_poly
from gsb.rewrite import build_basis
from gsb.symn import defining_rules, saturated_rules
from gsb.words import deglex_key
from helpers import random_binomial_rules


def brute_force_ambiguities(basis, bound):
    """Scan every candidate word directly against the two defining shapes."""
    leads = basis.leading_words
    found = set()
    for fid, fw in enumerate(leads):
        for gid, gw in enumerate(leads):
            # intersections: w = fw + gw[k:] with both flanks nonempty
            for k in range(1, min(len(fw), len(gw))):
                if fw[len(fw) - k :] != gw[:k]:
                    continue
                w = fw + gw[k:]
                if len(w) <= bound:
                    found.add((INTERSECTION, fid, gid, w, fw[: len(fw) - k], gw[k:]))
            # inclusions: gw a factor of fw, the full self-match excluded
            if fid != gid and len(gw) <= len(fw):
                for o in range(len(fw) - len(gw) + 1):
                    if fw[o : o + len(gw)] == gw and len(fw) <= bound:
                        found.add(
                            (INCLUSION, fid, gid, fw, fw[:o], fw[o + len(gw) :])
                        )
    return found


def test_enumerate_single_rule_no_ambiguities():
    b = build_basis([parse_poly("x2 x1 - x1 x2")])
    ambs, skipped = enumerate_ambiguities(b, 8)
    assert ambs == [] and skipped == 0


def test_enumerate_type1_pair_intersection():
    basis, _ = saturated_rules(3, 6)
    leads = basis.leading_words
    fid, gid = leads.index((2, 1, 3)), leads.index((3, 2, 1))
    ambs, _ = enumerate_ambiguities(basis, 6)
    hits = [
        a
        for a in ambs
        if a.f_id == fid and a.g_id == gid and a.kind == INTERSECTION
    ]
    assert [a.w for a in hits] == [(2, 1, 3, 2, 1)]


def test_enumerate_no_inclusion_between_type2_and_type1():
    basis, _ = saturated_rules(3, 6)
    leads = basis.leading_words
    fid, gid = leads.index((2, 1, 2, 3)), leads.index((2, 1, 3))
    ambs, _ = enumerate_ambiguities(basis, 8)
    pair = [a for a in ambs if a.f_id == fid and a.g_id == gid]
    assert all(a.kind == INTERSECTION for a in pair)


def test_enumerate_self_overlap():
    b = build_basis([parse_poly("x1 x2 x1 - x1 x1 x1")])
    assert b.leading_words == ((1, 2, 1),)
    ambs, _ = enumerate_ambiguities(b, 8)
    assert [(a.kind, a.f_id, a.g_id, a.w) for a in ambs] == [
        (INTERSECTION, 0, 0, (1, 2, 1, 2, 1))
    ]


def test_enumerate_matches_brute_force_on_random_rule_sets():
    rng = random.Random(30)
    for _ in range(60):
        rules = random_binomial_rules(rng, 2, 4, rng.randint(1, 4))
        basis = build_basis(rules)
        bound = rng.randint(3, 7)
        ambs, _ = enumerate_ambiguities(basis, bound)
        got = {(a.kind, a.f_id, a.g_id, a.w, a.a, a.b) for a in ambs}
        assert got == brute_force_ambiguities(basis, bound)
        assert len(got) == len(ambs)  # duplicate-free


def test_enumerate_deterministic_and_sorted():
    basis, _ = saturated_rules(3, 7)
    first, skipped_a = enumerate_ambiguities(basis, 7)
    second, skipped_b = enumerate_ambiguities(basis, 7)
    assert first == second and skipped_a == skipped_b
    keys = [a.sort_key() for a in first]
    assert keys == sorted(keys)


def test_skipped_beyond_bound_counted():
    basis, _ = saturated_rules(3, 7)
    full, none_skipped = enumerate_ambiguities(basis, 100)
    capped, skipped = enumerate_ambiguities(basis, 7)
    assert none_skipped == 0
    assert len(capped) + skipped == len(full)


def test_composition_example():
    basis, _ = saturated_rules(3, 6)
    leads = basis.leading_words
    amb = Ambiguity(
        kind=INTERSECTION,
        f_id=leads.index((2, 1, 3)),
        g_id=leads.index((3, 2, 1)),
        w=(2, 1, 3, 2, 1),
        a=(2, 1),
        b=(2, 1),
    )
    assert composition(amb, basis) == parse_poly("- x1 x2 x3 x2 x1 + x2 x1 x1 x2 x3")


def test_composition_words_below_w_and_homogeneous():
    basis, _ = saturated_rules(3, 7)
    ambs, _ = enumerate_ambiguities(basis, 7)
    assert ambs
    for amb in ambs:
        comp = composition(amb, basis)
        wkey = deglex_key(amb.w)
        for word in comp.support():
            assert deglex_key(word) < wkey
            assert len(word) == len(amb.w)  # homogeneous rules


def test_composition_rejects_stale_ambiguity():
    basis, _ = saturated_rules(3, 6)
    bad = Ambiguity(kind=INTERSECTION, f_id=0, g_id=99, w=(1,), a=(1,), b=(1,))
    with pytest.raises(ValueError):
        composition(bad, basis)
    bad_words = Ambiguity(kind=INTERSECTION, f_id=0, g_id=1, w=(1, 1), a=(1,), b=(1,))
    with pytest.raises(ValueError):
        composition(bad_words, basis)


def test_check_trivial_on_a_type1_overlap():
    basis, _ = saturated_rules(3, 6)
    leads = basis.leading_words
    amb = Ambiguity(
        kind=INTERSECTION,
        f_id=leads.index((2, 1, 3)),
        g_id=leads.index((3, 2, 1)),
        w=(2, 1, 3, 2, 1),
        a=(2, 1),
        b=(2, 1),
    )
    res = check_trivial(amb, basis)
    assert res.trivial and res.remainder.is_zero
    # both monomials of the composition meet at the same normal form
    assert res.trace.steps
    wkey = deglex_key(amb.w)
    assert all(deglex_key(s.word) < wkey for s in res.trace.steps)


def test_check_trivial_reports_nonzero_remainder_when_rules_missing():
    # the defining rules alone are not closed: some composition must fail
    basis = build_basis(defining_rules(3), alphabet_size=3)
    ambs, _ = enumerate_ambiguities(basis, 7)
    results = [check_trivial(a, basis) for a in ambs]
    bad = [r for r in results if not r.trivial]
    assert bad
    assert all(not r.remainder.is_zero for r in bad)


def test_check_trivial_many_parallel_matches_serial():
    basis, _ = saturated_rules(3, 7)
    ambs, _ = enumerate_ambiguities(basis, 7)
    serial = check_trivial_many(ambs, basis, jobs=1)
    parallel = check_trivial_many(ambs, basis, jobs=2)
    assert serial == parallel

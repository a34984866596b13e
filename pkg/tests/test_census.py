import itertools
from math import comb

import pytest

from gsb.census import (
    OracleBudgetError,
    check_unique_normal_forms,
    congruence_classes,
    count_normal_forms,
)
from gsb.words import words_of_degree


def test_classes_two_generators_length_two():
    partition = congruence_classes(2, 2)
    assert [list(c) for c in partition.classes] == [
        [(1, 1)],
        [(1, 2), (2, 1)],
        [(2, 2)],
    ]
    assert partition.representatives == ((1, 1), (1, 2), (2, 2))


def test_classes_three_generators_length_three():
    partition = congruence_classes(3, 3)
    assert len(partition.classes) == 22
    # all six permutation words collapse into one class
    perm_class = partition.class_of((1, 2, 3))
    assert set(perm_class) == {
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)
    }


def test_classes_below_n_are_singletons():
    for n, length in [(2, 1), (3, 2), (4, 3)]:
        partition = congruence_classes(n, length)
        assert len(partition.classes) == n**length
        assert all(len(c) == 1 for c in partition.classes)


def test_classes_partition_the_stratum():
    partition = congruence_classes(3, 4)
    seen = [w for c in partition.classes for w in c]
    assert len(seen) == 3**4
    assert sorted(seen) == sorted(words_of_degree(3, 4))


def test_classes_closed_under_single_relation_rewrites():
    partition = congruence_classes(3, 4)
    perms = set(itertools.permutations((1, 2, 3)))
    for cls in partition.classes:
        members = set(cls)
        for word in cls:
            for o in range(len(word) - 2):
                if word[o : o + 3] in perms:
                    for replacement in perms:
                        assert word[:o] + replacement + word[o + 3 :] in members


def test_oracle_budget_refusal():
    with pytest.raises(OracleBudgetError):
        congruence_classes(3, 10, budget=1000)
    with pytest.raises(OracleBudgetError):
        check_unique_normal_forms(3, 10, budget=1000)


def test_unique_normal_forms_small():
    for length in range(7):
        report = check_unique_normal_forms(2, length)
        assert report.passed
        assert report.class_count == (length + 1 if length >= 1 else 1)
        assert report.canonical_mismatches == ()

    report = check_unique_normal_forms(3, 4)
    assert report.passed
    assert report.class_count == 54  # 51 avoiders + 3 special words
    assert report.canonical_mismatches == ()

    report = check_unique_normal_forms(3, 2)
    assert report.passed and report.class_count == 9


def test_growth_series_matches_oracle():
    for n, max_len in [(2, 8), (3, 6)]:
        series = count_normal_forms(n, max_len)
        for length in range(max_len + 1):
            assert series.totals[length] == len(congruence_classes(n, length).classes)


def test_growth_series_closed_forms():
    series = count_normal_forms(3, 6)
    assert series.avoiders[3] == 21 and series.special[3] == 1
    # inclusion-exclusion at length 4: 81 - (18 + 18 - 6) = 51 avoiders
    assert series.avoiders[4] == 51 and series.special[4] == 3
    assert series.totals[3] == 22 and series.totals[4] == 54
    for length in range(7):
        if length < 3:
            assert series.avoiders[length] == 3**length
            assert series.special[length] == 0
        else:
            assert series.special[length] == comb(length - 1, 2)


def test_growth_two_generators_is_arithmetic():
    series = count_normal_forms(2, 8)
    assert list(series.totals) == [1, 2, 3, 4, 5, 6, 7, 8, 9]
    assert all(a == (2 if length >= 1 else 1) for length, a in enumerate(series.avoiders))


def test_avoider_counts_against_direct_enumeration():
    # independent of both the automaton and the oracle
    for n, max_len in [(2, 7), (3, 5)]:
        series = count_normal_forms(n, max_len)
        for length in range(max_len + 1):
            direct = sum(
                1
                for w in words_of_degree(n, length)
                if not any(
                    len(set(w[o : o + n])) == n for o in range(length - n + 1)
                )
            )
            assert series.avoiders[length] == direct


def test_growth_series_big_integers():
    # counts grow fast enough to need arbitrary precision for larger n
    series = count_normal_forms(4, 40)
    assert series.totals[40] > 2**64
    two = count_normal_forms(2, 200)
    assert two.totals[200] == 201


def test_counter_agrees_with_enumerator():
    from gsb.symn import enumerate_normal_forms

    for n, max_len in [(2, 7), (3, 5)]:
        series = count_normal_forms(n, max_len)
        for length in range(max_len + 1):
            assert series.totals[length] == len(enumerate_normal_forms(n, length))


def test_engine_normal_form_is_the_least_class_member():
    # ties the rewriting engine to ground truth word by word: reducing w must
    # land on the deg-lex-least element of w's congruence class
    from gsb.poly import Poly
    from gsb.rewrite import normal_form
    from gsb.symn import saturated_rules

    basis, _ = saturated_rules(3, 6)
    for length in range(6):
        partition = congruence_classes(3, length)
        for cls in partition.classes:
            least = cls[0]
            for word in cls:
                assert normal_form(Poly.monomial(word), basis) == Poly.monomial(least)


def test_canonical_representative_is_the_normal_form():
    from gsb.symn import is_normal_form

    for n, length in [(2, 5), (3, 4), (3, 5)]:
        partition = congruence_classes(n, length)
        for cls in partition.classes:
            assert is_normal_form(cls[0], n)
            assert sum(1 for w in cls if is_normal_form(w, n)) == 1

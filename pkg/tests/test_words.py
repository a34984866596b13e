import itertools
import random

import pytest

from gsb.words import (
    WordSyntaxError,
    compare_deglex,
    cyclic_rotation,
    deglex_key,
    enumerate_permutations,
    find_factor_occurrences,
    format_word,
    identity_permutation,
    is_permutation,
    parse_word,
    permutation_word,
    proper_overlaps,
    sort_word,
    words_of_degree,
)
from helpers import random_word


def test_compare_deglex_examples():
    assert compare_deglex((1,), (1, 1)) == -1  # degree dominates
    assert compare_deglex((2, 1), (1, 2)) == 1
    assert compare_deglex((1, 2, 3), (1, 3, 2)) == -1
    assert compare_deglex((2, 1), (2, 1)) == 0


def test_compare_deglex_total_order_random():
    rng = random.Random(1)
    for _ in range(2000):
        u, v, w = (random_word(rng, 3, 5) for _ in range(3))
        cuv, cvu = compare_deglex(u, v), compare_deglex(v, u)
        assert cuv == -cvu
        assert (cuv == 0) == (u == v)
        # transitivity
        if compare_deglex(u, v) <= 0 and compare_deglex(v, w) <= 0:
            assert compare_deglex(u, w) <= 0


def test_deglex_is_monomial_order():
    rng = random.Random(2)
    for _ in range(2000):
        u, v = random_word(rng, 3, 4), random_word(rng, 3, 4)
        if compare_deglex(u, v) >= 0:
            u, v = v, u
        if u == v:
            continue
        a, b = random_word(rng, 3, 3), random_word(rng, 3, 3)
        assert compare_deglex(a + u + b, a + v + b) == -1


def test_deglex_well_founded_at_fixed_degree():
    # at any fixed degree over n letters there are exactly n**d words, so
    # strictly descending chains within one degree cannot exceed that
    for n, d in [(2, 3), (3, 2), (3, 3)]:
        all_words = sorted(words_of_degree(n, d), key=deglex_key)
        assert len(all_words) == n**d
        assert all(
            compare_deglex(all_words[i], all_words[i + 1]) == -1
            for i in range(len(all_words) - 1)
        )


def test_sort_word():
    assert sort_word((2, 5, 4, 3, 2, 3)) == (2, 2, 3, 3, 4, 5)
    assert sort_word((1,)) == (1,)
    assert sort_word((3, 1, 2)) == (1, 2, 3)


def test_sort_word_properties():
    rng = random.Random(3)
    for _ in range(500):
        w = random_word(rng, 4, 6)
        s = sort_word(w)
        assert sort_word(s) == s
        assert len(s) == len(w)
        assert sorted(s) == sorted(w)
        assert compare_deglex(s, w) <= 0


def test_find_factor_occurrences():
    assert find_factor_occurrences((1, 2), (1, 2, 1, 2)) == [0, 2]
    assert find_factor_occurrences((2, 1), (1, 1, 2)) == []
    assert find_factor_occurrences((1, 2, 3), (3, 1, 2, 3)) == [1]


def test_find_factor_occurrences_rejects_empty_pattern():
    with pytest.raises(ValueError):
        find_factor_occurrences((), (1, 2))


def test_proper_overlaps_examples():
    assert proper_overlaps((2, 1), (1, 2)) == [1]
    assert proper_overlaps((2, 1), (2, 1)) == []
    assert proper_overlaps((2, 1, 3), (3, 2, 1)) == [1]


def test_proper_overlaps_against_brute_force():
    rng = random.Random(4)
    for _ in range(800):
        u = random_word(rng, 2, 5, min_len=1)
        v = random_word(rng, 2, 5, min_len=1)
        brute = [
            k
            for k in range(1, min(len(u), len(v)))
            if u[len(u) - k :] == v[:k]
        ]
        assert proper_overlaps(u, v) == brute


def test_enumerate_permutations():
    assert enumerate_permutations(1) == [(1,)]
    assert enumerate_permutations(2) == [(1, 2), (2, 1)]
    perms = enumerate_permutations(3)
    assert len(perms) == 6
    assert perms[0] == (1, 2, 3)
    assert perms[-1] == (3, 2, 1)
    assert perms == sorted(perms)
    with pytest.raises(ValueError):
        enumerate_permutations(0)


def test_permutation_word():
    assert permutation_word(identity_permutation(3)) == (1, 2, 3)
    assert permutation_word(cyclic_rotation(3)) == (2, 3, 1)
    assert permutation_word((2, 1)) == (2, 1)
    assert is_permutation((3, 1, 2))
    assert not is_permutation((1, 1, 2))
    with pytest.raises(ValueError):
        permutation_word((1, 3))


def test_permutation_words_use_each_generator_once():
    for perm in enumerate_permutations(4):
        w = permutation_word(perm)
        assert len(w) == 4
        assert sorted(w) == [1, 2, 3, 4]


def test_parse_and_format_word():
    assert parse_word("x2 x1 x3") == (2, 1, 3)
    assert parse_word("2 1 3") == (2, 1, 3)
    assert parse_word("") == ()
    assert format_word((2, 1, 3)) == "x2 x1 x3"
    assert format_word(()) == ""
    rng = random.Random(5)
    for _ in range(200):
        w = random_word(rng, 5, 8)
        assert parse_word(format_word(w)) == w


def test_parse_word_rejects_garbage():
    with pytest.raises(WordSyntaxError):
        parse_word("x2 y1")
    with pytest.raises(WordSyntaxError):
        parse_word("x0")
    with pytest.raises(WordSyntaxError):
        parse_word("0")


def test_words_of_degree_is_lexicographic():
    words = list(words_of_degree(2, 3))
    assert words == sorted(words)
    assert len(words) == 8
    assert words[0] == (1, 1, 1)
    assert list(itertools.islice(words_of_degree(3, 0), 5)) == [()]

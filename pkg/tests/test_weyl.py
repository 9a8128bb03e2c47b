import random

import pytest

from orthoschubert.weyl import (
    PermutationA,
    SignedPermutation,
    WeylError,
    all_signed_permutations,
    canonical_reduced_word,
    compose,
    evaluate_word,
    flatten,
    format_word,
    is_reduced,
    lengths_batch,
    longest_element,
    longest_element_A,
    max_grassmannian,
    parse_word,
    phi_embed,
    random_signed_permutation,
    reduced_words,
)

import oracles

S = SignedPermutation.parse


def test_identity_compose():
    w = S("-3,1,-2")
    assert compose(SignedPermutation.identity(3), w) == w


def test_word_evaluation():
    assert evaluate_word(parse_word("1 2 0"), 3) == S("-3,-2,1")


def test_box_acts_on_first_two():
    assert SignedPermutation.identity(3).right_act(0) == S("-2,-1,3")


def test_lengths():
    assert SignedPermutation.identity(4).length() == 0
    assert S("-1,4,-3,2").length() == 5
    assert longest_element(3).length() == 6


def test_lengths_match_bfs():
    for n in (2, 3, 4):
        dist = oracles.bfs_lengths(n)
        elems = list(all_signed_permutations(n))
        assert len(elems) == oracles.group_order(n) == len(dist)
        for w in elems:
            assert w.length() == dist[w.entries]
        assert list(lengths_batch(elems)) == [dist[w.entries] for w in elems]


def test_reducedness():
    assert is_reduced(parse_word("2 0 3 1 2"), 4)
    assert evaluate_word(parse_word("2 0 3 1 2"), 4) == S("-1,4,-3,2")
    assert not is_reduced((1, 1), 3)


def test_reduced_words_of_commuting_pair():
    words = reduced_words(S("-1,-2,3"))
    assert sorted(words) == [(0, 1), (1, 0)]


def test_reduced_words_all_evaluate():
    for w in all_signed_permutations(3):
        ws = reduced_words(w)
        assert canonical_reduced_word(w) == min(ws)
        for word in ws:
            assert len(word) == w.length()
            assert evaluate_word(word, 3) == w


def test_flatten():
    assert flatten(parse_word("2 0 3 1 2")) == (2, 1, 3, 1, 2)
    assert flatten((1, 2)) == (1, 2)
    assert flatten((0,)) == (1,)
    assert format_word((2, 0)) == "2 0"


def test_longest():
    assert longest_element(4) == S("-1,-2,-3,-4")
    assert longest_element(3) == S("1,-2,-3")
    assert longest_element_A(3) == PermutationA((3, 2, 1))


def test_max_grassmannian():
    assert max_grassmannian((2,), 3) == S("-3,-1,2")
    assert max_grassmannian((2, 1), 3) == S("-3,-2,1")
    assert max_grassmannian((), 3) == SignedPermutation.identity(3)
    with pytest.raises(WeylError):
        max_grassmannian((3,), 3)


def test_phi():
    assert phi_embed(SignedPermutation.identity(3)) == PermutationA.identity(6)
    assert phi_embed(S("-2,-1")) == PermutationA((3, 4, 1, 2))
    rng = random.Random(5)
    for _ in range(100):
        w = random_signed_permutation(4, rng)
        img = phi_embed(w).entries
        assert sum(1 for i in range(4) if img[i] > 4) % 2 == 0


def test_odd_sign_changes_rejected():
    with pytest.raises(WeylError):
        S("-1,2,3")
    with pytest.raises(WeylError):
        S("1,1,2")


def test_group_laws():
    rng = random.Random(0)
    for _ in range(50):
        u, v, w = (random_signed_permutation(4, rng) for _ in range(3))
        assert (u * v) * w == u * (v * w)
        assert u * u.inverse() == SignedPermutation.identity(4)
        assert u.inverse().length() == u.length()


def test_permutation_parse_forms():
    assert PermutationA.parse("213") == PermutationA.parse("2,1,3")
    assert PermutationA.parse("213").length() == 1

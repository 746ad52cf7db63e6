"""The Cayley-graph models must be valid stand-ins for the word machinery:
they share no code with it, so any agreement is meaningful evidence."""

import itertools

from coxsort import CoxeterSystem
from coxsort.oracles import (bruhat_leq_bruteforce, canonical_word_bruteforce,
                             contains_reduced_word_bruteforce, permutation_model,
                             signed_permutation_model, sorting_subword_bruteforce)


def test_permutation_model_shape():
    model = permutation_model(3)
    assert model.order() == 24
    assert model.rank == 3
    assert model.lengths[model.identity] == 0
    w0 = model.product((1, 2, 3, 1, 2, 1))
    assert model.lengths[w0] == 6  # unique longest element of S4
    assert model.is_reduced((1, 2, 1)) and not model.is_reduced((1, 1))


def test_signed_model_shape():
    model = signed_permutation_model(2)
    assert model.order() == 8
    assert model.lengths[model.product((1, 2, 1, 2))] == 4
    # the two reduced words of the longest element multiply equal
    assert model.product((1, 2, 1, 2)) == model.product((2, 1, 2, 1))


def test_artin_orders_match_coxeter_matrices():
    a3 = CoxeterSystem.type_a(3)
    pm = permutation_model(3)
    for i, j in itertools.combinations(range(1, 4), 2):
        assert pm.artin_order(i, j) == a3.m(i, j)
    b2 = CoxeterSystem.type_b(2)
    sm = signed_permutation_model(2)
    assert sm.artin_order(1, 2) == b2.m(1, 2) == 4


def test_lexmin_words_are_reduced_and_minimal():
    model = signed_permutation_model(2)
    for g in model.elements():
        word = model.lexmin_word(g)
        assert model.product(word) == g
        assert len(word) == model.lengths[g]


def test_canonical_word_bruteforce():
    model = permutation_model(2)
    assert canonical_word_bruteforce(model, (2, 1, 2)) == (1, 2, 1)
    assert canonical_word_bruteforce(model, (1, 1)) == ()


def test_bruhat_bruteforce_examples():
    model = signed_permutation_model(2)
    assert bruhat_leq_bruteforce(model, (), (1, 2))
    assert bruhat_leq_bruteforce(model, (1,), (2, 1, 2))
    assert not bruhat_leq_bruteforce(model, (1, 2, 1), (2, 1, 2))


def test_contains_and_sorting_bruteforce():
    model = signed_permutation_model(2)
    assert contains_reduced_word_bruteforce(model, (1, 2, 1, 2), (2, 1, 2))
    assert not contains_reduced_word_bruteforce(model, (1, 1), (2,))
    assert sorting_subword_bruteforce(model, (2, 1, 2), (1,)) == (2,)
    assert sorting_subword_bruteforce(model, (2, 1, 2), (2, 1)) == (1, 2)
    assert sorting_subword_bruteforce(model, (1, 1), (2,)) is None

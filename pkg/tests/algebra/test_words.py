from hypothesis import given, settings

import pytest
from chartfold.algebra import (
    Permutation,
    braid_word,
    format_word,
    free_reduce,
    parse_permutation,
    parse_word,
    perm_image,
    perm_word,
)
from chartfold.errors import DegreeError, ParseError
from tests.strategies import braid_words, perm_words


def test_empty_word_is_identity():
    assert perm_image(perm_word([]), 3).is_identity()


def test_t1_t2_t1_is_transposition_1_3():
    image = perm_image(perm_word([1, 2, 1]), 3)
    assert image == Permutation.transposition(1, 3, 3)
    assert str(image) == "(1 3)"


def test_braid_relation_words_have_equal_images():
    assert perm_image(perm_word([2, 1, 2]), 3) == perm_image(perm_word([1, 2, 1]), 3)


def test_letter_index_must_fit_degree():
    with pytest.raises(DegreeError):
        perm_image(perm_word([3]), 3)


def test_free_reduce_examples():
    assert len(free_reduce(braid_word([1, -1]))) == 0
    assert free_reduce(braid_word([1, 1])) == braid_word([1, 1])
    assert len(free_reduce(braid_word([2, 1, -1, -2]))) == 0


def test_parse_and_format_word():
    word = parse_word("(s1' s2 s1')")
    assert word == braid_word([-1, 2, -1])
    assert format_word(word) == "(s1' s2 s1')"
    assert format_word(parse_word("(t1 t3)")) == "(t1 t3)"
    assert parse_word("()", kind="perm").kind == "perm"


def test_parse_word_rejects_mixed_kinds():
    with pytest.raises(ParseError):
        parse_word("(t1 s2)")
    with pytest.raises(ParseError):
        parse_word("(t1')")


def test_parse_permutation_cycles():
    assert parse_permutation("(1 3)", 3) == Permutation.transposition(1, 3, 3)
    assert parse_permutation("()", 4).is_identity()


def test_conjugation_moves_support():
    a = Permutation.transposition(1, 2, 4)
    g = Permutation.from_cycles([(2, 3, 4)], 4)
    assert a.conjugate_by(g) == Permutation.transposition(1, 3, 4)


@settings(max_examples=60)
@given(perm_words(), perm_words())
def test_perm_image_is_multiplicative(u, v):
    assert perm_image(u + v, 4) == perm_image(u, 4).then(perm_image(v, 4))


@settings(max_examples=60)
@given(braid_words())
def test_free_reduce_idempotent_and_image_preserving(word):
    reduced = free_reduce(word)
    assert free_reduce(reduced) == reduced
    assert len(reduced) <= len(word)
    assert perm_image(reduced, 3) == perm_image(word, 3)

from hypothesis import given, settings

import pytest
from chartfold.algebra import braid_equal, braid_word, free_reduce, knot_determinant
from chartfold.errors import NotAKnotError
from tests.strategies import braid_words


def test_braid_relation_holds():
    assert braid_equal(braid_word([1, 2, 1]), braid_word([2, 1, 2]), 3)


def test_generators_do_not_commute():
    assert not braid_equal(braid_word([1, 2]), braid_word([2, 1]), 3)


def test_far_generators_commute():
    assert braid_equal(braid_word([1, 3]), braid_word([3, 1]), 4)


@settings(max_examples=40)
@given(braid_words())
def test_free_equality_implies_braid_equality(word):
    assert braid_equal(word, free_reduce(word), 3)
    assert braid_equal(word + word.inverse(), braid_word([]), 3)


def test_trefoil_determinant():
    assert knot_determinant(braid_word([1, 1, 1]), 2) == 3


def test_unknot_determinants():
    assert knot_determinant(braid_word([1]), 2) == 1
    assert knot_determinant(braid_word([]), 1) == 1


def test_five_two_determinant():
    assert knot_determinant(braid_word([1, 1, 1, 2, -1, 2]), 3) == 7


def test_seven_four_determinant():
    beta = braid_word([1, 1, 2, -1, 2, 2, 3, -2, 3])
    assert knot_determinant(beta, 4) == 15


def test_link_closure_is_rejected():
    with pytest.raises(NotAKnotError):
        knot_determinant(braid_word([1, 1]), 2)

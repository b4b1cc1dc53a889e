from fractions import Fraction

import pytest

from thompson.errors import WordSyntaxError
from thompson.words import (
    BinaryTree,
    DyadicFraction,
    branches,
    caret_count_identity_check,
    common_refinement,
    ell0,
    ell1,
    format_binary_word,
    minimal_tree_with_branch,
    parse_binary_word,
    tree_from_carets,
)


def random_tree(rng, splits):
    t = BinaryTree.singleton()
    for _ in range(splits):
        t = t.split(rng.choice(t.branches))
    return t


def test_suffix_lengths():
    assert ell0("") == 0
    assert ell0("0100") == 2
    assert ell0("01") == 0
    assert ell1("01") == 1
    assert ell1("00") == 0
    assert ell1("111") == 3


def test_exactly_one_suffix_statistic_is_nonzero(rng):
    for _ in range(100):
        u = "".join(rng.choice("01") for _ in range(rng.randint(1, 10)))
        assert (ell0(u) == 0) != (ell1(u) == 0)


def test_branches():
    assert branches(BinaryTree.caret()) == ("0", "1")
    assert branches(BinaryTree(("00", "01", "1"))) == ("00", "01", "1")
    assert branches(BinaryTree.singleton()) == ("",)


def test_tree_rejects_bad_branch_sets():
    with pytest.raises(WordSyntaxError):
        BinaryTree(("1", "0"))
    with pytest.raises(WordSyntaxError):
        BinaryTree(("0", "01", "1"))
    with pytest.raises(WordSyntaxError):
        BinaryTree(("00", "1"))
    with pytest.raises(WordSyntaxError):
        BinaryTree(("0", "2"))


def test_caret_count_identity():
    assert caret_count_identity_check(BinaryTree(("00", "01", "1")))
    assert caret_count_identity_check(BinaryTree.singleton())


def test_caret_count_identity_on_random_trees(rng):
    for _ in range(200):
        t = random_tree(rng, rng.randint(0, 15))
        assert len(t.carets()) == t.leaf_count - 1
        assert caret_count_identity_check(t)
        assert list(t.branches) == sorted(t.branches)


def test_tree_from_carets():
    assert tree_from_carets([]) == BinaryTree.singleton()
    assert tree_from_carets(["", "0"]).branches == ("00", "01", "1")
    with pytest.raises(WordSyntaxError):
        tree_from_carets(["", "01"])


def test_common_refinement_contains_both():
    a = BinaryTree(("00", "01", "1"))
    b = BinaryTree(("0", "10", "11"))
    both = common_refinement(a, b)
    assert both.branches == ("00", "01", "10", "11")


def test_minimal_tree_with_branch():
    assert minimal_tree_with_branch("").branches == ("",)
    assert minimal_tree_with_branch("01").branches == ("00", "01", "1")
    assert minimal_tree_with_branch("010").branches == ("00", "010", "011", "1")


def test_dyadic_fraction_canonical_form():
    assert DyadicFraction.from_word("0100").word == "01"
    assert DyadicFraction.from_word("01").value == Fraction(1, 4)
    assert DyadicFraction.from_fraction(Fraction(5, 8)).word == "101"
    assert str(DyadicFraction("11")) == ".11"
    with pytest.raises(WordSyntaxError):
        DyadicFraction("10")
    with pytest.raises(WordSyntaxError):
        DyadicFraction.from_word("000")
    with pytest.raises(WordSyntaxError):
        DyadicFraction.from_fraction(Fraction(1, 3))


def test_empty_word_spelling():
    assert parse_binary_word("e") == ""
    assert parse_binary_word(" 0110 ") == "0110"
    assert format_binary_word("") == "e"
    with pytest.raises(WordSyntaxError) as info:
        parse_binary_word("01a")
    assert info.value.position == 2

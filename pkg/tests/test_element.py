from fractions import Fraction

import pytest

from conftest import random_word
from thompson.element import (
    TreeDiagram,
    abelianize,
    commutator,
    conjugate,
    copy_in,
    diagram_of,
    direct_sum,
    evaluate,
    has_pair,
    invert,
    is_reduced,
    make_x,
    multiply,
    parse_word,
    reduce,
    slope_left,
    slope_right,
    tuple_sequence,
)
from thompson.errors import WordSyntaxError
from thompson.words import DyadicFraction

IDENTITY = TreeDiagram.identity()


def pairs(d):
    return set(d.pairs)


def random_dyadic(rng):
    return DyadicFraction.from_fraction(Fraction(2 * rng.randint(0, 63) + 1, 128))


def test_generators():
    assert pairs(make_x(0)) == {("00", "0"), ("01", "10"), ("1", "11")}
    assert pairs(make_x(1)) == {("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")}
    assert make_x(2) == reduce(conjugate(make_x(1), make_x(0)))
    assert make_x(2) == diagram_of("X0 x1 x0")


def test_generator_relation_x_i_conjugated_by_x_j():
    for j in range(3):
        for i in range(j + 1, 5):
            assert conjugate(make_x(i), make_x(j)) == make_x(i + 1)


def test_reduce():
    caret_pairs = TreeDiagram.from_pairs([("0", "0"), ("10", "10"), ("11", "11")])
    assert reduce(caret_pairs) == IDENTITY
    assert reduce(make_x(0)) is make_x(0)
    assert is_reduced(make_x(3))
    assert multiply(make_x(0), invert(make_x(0))) == IDENTITY


def test_presentation_relators_are_trivial():
    a = multiply(make_x(0), invert(make_x(1)))
    assert commutator(a, conjugate(make_x(1), make_x(0))) == IDENTITY
    assert commutator(a, conjugate(conjugate(make_x(1), make_x(0)), make_x(0))) == IDENTITY


def test_invert():
    assert pairs(invert(make_x(0))) == {("0", "00"), ("10", "01"), ("11", "1")}
    assert invert(IDENTITY) == IDENTITY
    assert invert(invert(make_x(1))) == make_x(1)


def test_group_axioms_on_random_words(rng):
    for _ in range(50):
        a, b, c = (diagram_of(random_word(rng, 12)) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        assert multiply(a, IDENTITY) == a
        assert multiply(IDENTITY, a) == a
        assert multiply(a, invert(a)) == IDENTITY


def test_evaluate():
    assert evaluate(make_x(0), DyadicFraction("01")) == DyadicFraction("1")
    assert evaluate(make_x(1), DyadicFraction("101")) == DyadicFraction("11")
    assert evaluate(IDENTITY, DyadicFraction("0111")) == DyadicFraction("0111")


def test_evaluate_composes_left_to_right_and_increases(rng):
    for _ in range(50):
        a = diagram_of(random_word(rng, 8))
        b = diagram_of(random_word(rng, 8))
        alpha, beta = random_dyadic(rng), random_dyadic(rng)
        assert evaluate(multiply(a, b), alpha) == evaluate(b, evaluate(a, alpha))
        if alpha.value < beta.value:
            assert evaluate(a, alpha).value < evaluate(a, beta).value


def test_slopes():
    assert slope_right(make_x(0)) == 1
    assert slope_right(make_x(1)) == 0
    assert slope_right(IDENTITY, DyadicFraction("01")) == 0
    assert slope_left(make_x(0)) == -1
    assert slope_left(make_x(1)) == -1
    assert slope_left(IDENTITY) == 0
    # x0 has slope 1 on [1/4, 1/2], and slope 2 just left of 1/4
    assert slope_right(make_x(0), DyadicFraction("01")) == 0
    assert slope_left(make_x(0), DyadicFraction("01")) == 1


def test_abelianize():
    assert abelianize(make_x(0)) == (1, -1)
    assert abelianize(make_x(1)) == (0, -1)
    assert abelianize(IDENTITY) == (0, 0)


def test_copy_in():
    assert pairs(copy_in("0", make_x(0))) == {
        ("000", "00"), ("001", "010"), ("01", "011"), ("1", "1"),
    }
    assert copy_in("", make_x(1)) == make_x(1)
    assert copy_in("0110", IDENTITY) == IDENTITY


def test_direct_sum(rng):
    g = diagram_of("x0 x1")
    assert direct_sum(g, IDENTITY) == copy_in("0", g)
    assert direct_sum(IDENTITY, IDENTITY) == IDENTITY
    for _ in range(20):
        g = diagram_of(random_word(rng, 6))
        h = diagram_of(random_word(rng, 6))
        assert abelianize(direct_sum(g, h)) == (abelianize(g)[0], abelianize(h)[1])


def test_tuple_sequence():
    assert tuple_sequence(make_x(0)) == [(0, -1), (1, 0)]
    identity_shaped = TreeDiagram.from_pairs([("00", "00"), ("01", "01"), ("1", "1")])
    assert tuple_sequence(identity_shaped) == [(0, 0), (0, 0)]


def test_tuple_sum_identity(rng):
    for _ in range(500):
        d = diagram_of(random_word(rng, 12))
        ts = tuple_sequence(d)
        total = (sum(t[0] for t in ts), sum(t[1] for t in ts))
        assert total == (-slope_left(d), -slope_right(d))


def test_unreduced_diagrams_agree_with_their_reduction(rng):
    for _ in range(30):
        d = diagram_of(random_word(rng, 8))
        # insert a common caret under a random pair of branches
        i = rng.randrange(len(d.pairs))
        expanded = []
        for k, (u, v) in enumerate(d.pairs):
            expanded.extend([(u + "0", v + "0"), (u + "1", v + "1")] if k == i else [(u, v)])
        wide = TreeDiagram.from_pairs(expanded)
        assert reduce(wide) == d
        assert abelianize(wide) == abelianize(d)
        alpha = random_dyadic(rng)
        assert evaluate(wide, alpha) == evaluate(d, alpha)
        ts = tuple_sequence(wide)
        assert (sum(t[0] for t in ts), sum(t[1] for t in ts)) == (-slope_left(d), -slope_right(d))
        u, v = d.pairs[i]
        assert has_pair(wide, u + "0", v + "0")
        assert not has_pair(wide, u, v)


def test_parse_word_errors():
    assert parse_word("") == []
    assert parse_word("x0 X12") == [(0, 1), (12, -1)]
    with pytest.raises(WordSyntaxError) as info:
        parse_word("x0 y1")
    assert info.value.position == 1
    with pytest.raises(WordSyntaxError):
        make_x(-1)


def test_size_counts_carets_of_reduced_diagram():
    assert IDENTITY.size == 0
    assert make_x(0).size == 2
    assert make_x(1).size == 3
    wide = TreeDiagram.from_pairs([("00", "00"), ("01", "01"), ("1", "1")])
    assert wide.size == 0 and wide.is_identity()

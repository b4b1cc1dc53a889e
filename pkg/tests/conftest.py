import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from thompson.automaton import TreeAutomaton
from thompson.element import TreeDiagram, diagram_of, format_word, invert, multiply, reduce

MAXIMAL_WORDS = ["x0", "x1 x1 X3 X2 X1", "x1 x2 x2 X3 X1 X1"]

NOT_CORE_TEXT = """root r
edge f 0 f
edge f 1 h
edge g 0 h
edge g 1 g
edge h 0 h
edge h 1 k
edge r 0 f
edge r 1 g
"""


def random_word(rng: random.Random, max_length: int, max_index: int = 3) -> str:
    length = rng.randint(0, max_length)
    return format_word(
        [(rng.randint(0, max_index), rng.choice((1, -1))) for _ in range(length)]
    )


def products(gens, max_length: int) -> set[TreeDiagram]:
    """Every reduced product of at most max_length letters from gens and their inverses."""
    letters = list(gens) + [invert(g) for g in gens]
    found = {TreeDiagram.identity()}
    frontier = [TreeDiagram.identity()]
    for _ in range(max_length):
        frontier = [f for f in dict.fromkeys(multiply(f, g) for f in frontier for g in letters) if f not in found]
        found.update(frontier)
    return found


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def not_core():
    """r = fg, f = fh, g = hg, h = hk, with k a leaf."""
    return TreeAutomaton("r", {
        ("r", 0): "f", ("r", 1): "g",
        ("f", 0): "f", ("f", 1): "h",
        ("g", 0): "h", ("g", 1): "g",
        ("h", 0): "h", ("h", 1): "k",
    })


@pytest.fixture
def maximal_generators():
    return [reduce(diagram_of(w)) for w in MAXIMAL_WORDS]


@pytest.fixture
def standard_generators():
    return [diagram_of("x0"), diagram_of("x1")]

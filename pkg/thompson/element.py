"""
Element - elements of Thompson's group F as tree-diagrams

A tree-diagram (T+, T-) pairs the i-th branch of T+ with the i-th branch of
T-; the pair u -> v means the element maps [u] linearly onto [v]. Composition
is from left to right: multiply(a, b) applies a first, then b.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import WordSyntaxError
from .words import (
    BinaryTree,
    DyadicFraction,
    common_refinement,
    ell0,
    ell1,
    minimal_tree_with_branch,
)

Letter = tuple[int, int]
"""One generator letter: (index n >= 0, exponent +1 or -1)."""

_TOKEN = re.compile(r"^([xX])(\d+)$")


class AbelianImage(NamedTuple):
    """(log2 slope at 0+, log2 slope at 1-)."""

    at_zero: int
    at_one: int


@dataclass(frozen=True)
class TreeDiagram:
    domain_tree: BinaryTree
    range_tree: BinaryTree

    def __post_init__(self):
        if self.domain_tree.leaf_count != self.range_tree.leaf_count:
            raise WordSyntaxError(
                f"trees have {self.domain_tree.leaf_count} and "
                f"{self.range_tree.leaf_count} leaves"
            )

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "TreeDiagram":
        pairs = list(pairs)
        return cls(
            BinaryTree(tuple(u for u, _ in pairs)),
            BinaryTree(tuple(v for _, v in pairs)),
        )

    @classmethod
    def identity(cls) -> "TreeDiagram":
        return cls(BinaryTree.singleton(), BinaryTree.singleton())

    @property
    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(zip(self.domain_tree.branches, self.range_tree.branches))

    @property
    def size(self) -> int:
        """Number of carets in each tree of the reduced diagram."""
        return reduce(self).domain_tree.leaf_count - 1

    def is_identity(self) -> bool:
        return reduce(self).domain_tree.leaf_count == 1

    def __str__(self) -> str:
        return ", ".join(f"{u or 'e'}->{v or 'e'}" for u, v in self.pairs)


def _branch_with_prefix_of(index: dict[str, int], w: str) -> int:
    """Index of the unique branch that is a prefix of w."""
    for k in range(len(w) + 1):
        i = index.get(w[:k])
        if i is not None:
            return i
    raise WordSyntaxError(f"no branch is a prefix of '{w}'")


# ===========================================
# Group operations
# ===========================================

def reduce(d: TreeDiagram) -> TreeDiagram:
    """Cancel common carets until none is left; the result is unique."""
    stack: list[tuple[str, str]] = []
    for pair in d.pairs:
        stack.append(pair)
        while len(stack) >= 2:
            (u1, v1), (u2, v2) = stack[-2], stack[-1]
            if (
                u1.endswith("0") and v1.endswith("0")
                and u2 == u1[:-1] + "1" and v2 == v1[:-1] + "1"
            ):
                stack[-2:] = [(u1[:-1], v1[:-1])]
            else:
                break
    if len(stack) == len(d.pairs):
        return d
    return TreeDiagram.from_pairs(stack)


def is_reduced(d: TreeDiagram) -> bool:
    return reduce(d) is d


def multiply(a: TreeDiagram, b: TreeDiagram) -> TreeDiagram:
    """The reduced diagram of ab (a acts first)."""
    middle = common_refinement(a.range_tree, b.domain_tree)
    a_range = {v: i for i, v in enumerate(a.range_tree.branches)}
    b_domain = {s: j for j, s in enumerate(b.domain_tree.branches)}
    pairs = []
    for w in middle.branches:
        i = _branch_with_prefix_of(a_range, w)
        j = _branch_with_prefix_of(b_domain, w)
        u = a.domain_tree.branches[i] + w[len(a.range_tree.branches[i]):]
        t = b.range_tree.branches[j] + w[len(b.domain_tree.branches[j]):]
        pairs.append((u, t))
    return reduce(TreeDiagram.from_pairs(pairs))


def invert(a: TreeDiagram) -> TreeDiagram:
    return TreeDiagram(a.range_tree, a.domain_tree)


def power(a: TreeDiagram, n: int) -> TreeDiagram:
    base = a if n >= 0 else invert(a)
    result = TreeDiagram.identity()
    for _ in range(abs(n)):
        result = multiply(result, base)
    return result


def conjugate(a: TreeDiagram, b: TreeDiagram) -> TreeDiagram:
    """a^b = b^-1 a b."""
    return multiply(multiply(invert(b), a), b)


def commutator(a: TreeDiagram, b: TreeDiagram) -> TreeDiagram:
    """[a, b] = a^-1 b^-1 a b."""
    return multiply(multiply(invert(a), invert(b)), multiply(a, b))


# ===========================================
# Generators
# ===========================================

X0 = TreeDiagram.from_pairs([("00", "0"), ("01", "10"), ("1", "11")])
X1 = TreeDiagram.from_pairs([("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")])


@lru_cache(maxsize=None)
def make_x(n: int) -> TreeDiagram:
    """x_n, with x_{n+1} = x0^-1 x_n x0 for n >= 1."""
    if n < 0:
        raise WordSyntaxError(f"generator index must be nonnegative (got {n})")
    if n == 0:
        return X0
    if n == 1:
        return X1
    return conjugate(make_x(n - 1), X0)


def parse_word(text: str) -> list[Letter]:
    """Parse `x0 x1 X2 ...` (uppercase = inverse); blank text is the empty word."""
    letters = []
    for position, token in enumerate(text.split()):
        m = _TOKEN.match(token)
        if not m:
            raise WordSyntaxError(f"bad generator token '{token}'", position=position)
        letters.append((int(m.group(2)), 1 if m.group(1) == "x" else -1))
    return letters


def format_word(letters: Sequence[Letter]) -> str:
    return " ".join(("x" if e > 0 else "X") + str(n) for n, e in letters)


def word_to_diagram(letters: Sequence[Letter]) -> TreeDiagram:
    result = TreeDiagram.identity()
    for n, e in letters:
        g = make_x(n)
        result = multiply(result, g if e > 0 else invert(g))
    return result


def diagram_of(text: str) -> TreeDiagram:
    """Shortcut: parse a generator word and evaluate it."""
    return word_to_diagram(parse_word(text))


# ===========================================
# Action on [0,1]
# ===========================================

def _padded_pair(f: TreeDiagram, base: str, pad: str) -> tuple[str, str, str]:
    longest = max(len(u) for u in f.domain_tree.branches)
    w = base + pad * max(0, longest - len(base))
    domain = {u: i for i, u in enumerate(f.domain_tree.branches)}
    i = _branch_with_prefix_of(domain, w)
    return f.domain_tree.branches[i], f.range_tree.branches[i], w


def evaluate(f: TreeDiagram, alpha: DyadicFraction) -> DyadicFraction:
    """f(alpha): .u_i beta goes to .v_i beta."""
    u, v, w = _padded_pair(f, alpha.word, "0")
    return DyadicFraction.from_word(v + w[len(u):])


def slope_right(f: TreeDiagram, alpha: DyadicFraction | None = None) -> int:
    """log2 of the slope of f just right of alpha (alpha=None means 0)."""
    u, v, _ = _padded_pair(f, alpha.word if alpha else "", "0")
    return len(u) - len(v)


def slope_left(f: TreeDiagram, alpha: DyadicFraction | None = None) -> int:
    """
    log2 of the slope of f just left of alpha (alpha=None means 1).

    .u'1 is read from the left as .u'0111...
    """
    base = alpha.word[:-1] + "0" if alpha else ""
    u, v, _ = _padded_pair(f, base, "1")
    return len(u) - len(v)


def abelianize(f: TreeDiagram) -> AbelianImage:
    return AbelianImage(slope_right(f), slope_left(f))


# ===========================================
# Copies, sums and tuples
# ===========================================

def copy_in(u: str, g: TreeDiagram) -> TreeDiagram:
    """The [u]-copy of g: acts as g on [u], identity elsewhere."""
    pairs = []
    for b in minimal_tree_with_branch(u).branches:
        if b == u:
            pairs.extend((u + v, u + w) for v, w in reduce(g).pairs)
        else:
            pairs.append((b, b))
    return reduce(TreeDiagram.from_pairs(pairs))


def direct_sum(g: TreeDiagram, h: TreeDiagram) -> TreeDiagram:
    """g on [0] and h on [1]."""
    return multiply(copy_in("0", g), copy_in("1", h))


def tuple_sequence(d: TreeDiagram) -> list[tuple[int, int]]:
    """t_i = (ℓ1(u_i) - ℓ1(v_i), ℓ0(u_{i+1}) - ℓ0(v_{i+1})) over consecutive pairs."""
    pairs = d.pairs
    return [
        (ell1(pairs[i][0]) - ell1(pairs[i][1]), ell0(pairs[i + 1][0]) - ell0(pairs[i + 1][1]))
        for i in range(len(pairs) - 1)
    ]


def has_pair(d: TreeDiagram, u: str, v: str) -> bool:
    return (u, v) in d.pairs

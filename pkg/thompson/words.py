"""
Words - finite binary words, dyadic fractions and full binary trees

A finite binary word is a plain str over "0"/"1". It labels a path from the
root of a binary tree (0 = left, 1 = right) and, read after a binary point,
a dyadic fraction.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import WordSyntaxError

EMPTY_WORD_TOKEN = "e"


def check_word(u: str) -> str:
    """Return u unchanged, or raise if it has a digit other than 0/1."""
    for i, digit in enumerate(u):
        if digit not in "01":
            raise WordSyntaxError(f"'{u}' is not a binary word", position=i)
    return u


def parse_binary_word(text: str) -> str:
    """Parse CLI/file spelling, where the empty word is written 'e'."""
    text = text.strip()
    if text == EMPTY_WORD_TOKEN:
        return ""
    return check_word(text)


def format_binary_word(u: str) -> str:
    return u if u else EMPTY_WORD_TOKEN


def flip(digit: str) -> str:
    return "1" if digit == "0" else "0"


def ell0(u: str) -> int:
    """Length of the longest suffix of zeros."""
    return len(u) - len(u.rstrip("0"))


def ell1(u: str) -> int:
    """Length of the longest suffix of ones."""
    return len(u) - len(u.rstrip("1"))


# ===========================================
# Dyadic fractions
# ===========================================

@dataclass(frozen=True)
class DyadicFraction:
    """A dyadic fraction in (0,1), stored as its canonical word (last digit 1)."""

    word: str

    def __post_init__(self):
        check_word(self.word)
        if not self.word or not self.word.endswith("1"):
            raise WordSyntaxError(
                f"'{self.word}' is not a canonical dyadic word (must be nonempty and end in 1)"
            )

    @classmethod
    def from_word(cls, u: str) -> "DyadicFraction":
        """Strip trailing zeros; .u must lie strictly between 0 and 1."""
        stripped = check_word(u).rstrip("0")
        if not stripped:
            raise WordSyntaxError(f"'{u}' represents 0, not a point of (0,1)")
        return cls(stripped)

    @classmethod
    def from_fraction(cls, x: Fraction) -> "DyadicFraction":
        x = Fraction(x)
        if not 0 < x < 1:
            raise WordSyntaxError(f"{x} is not in (0,1)")
        den = x.denominator
        if den & (den - 1):
            raise WordSyntaxError(f"{x} is not dyadic")
        bits = den.bit_length() - 1
        return cls(format(x.numerator, f"0{bits}b"))

    @property
    def value(self) -> Fraction:
        return Fraction(int(self.word, 2), 2 ** len(self.word))

    def __str__(self) -> str:
        return "." + self.word


# ===========================================
# Full finite binary trees
# ===========================================

@dataclass(frozen=True)
class BinaryTree:
    """
    A full finite binary tree given by its branches, left to right.

    The branch set is a maximal prefix-free set of words; the tuple order is
    the lexicographic order with 0 < 1, which is the left-to-right order.
    """

    branches: tuple[str, ...]
    _carets: frozenset = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.branches:
            raise WordSyntaxError("a tree has at least one branch")
        for u in self.branches:
            check_word(u)
        if list(self.branches) != sorted(self.branches):
            raise WordSyntaxError(f"branches {list(self.branches)} are not in left-to-right order")
        for a, b in zip(self.branches, self.branches[1:]):
            if b.startswith(a):
                raise WordSyntaxError(f"branch '{a}' is a prefix of '{b}'")
        if sum(Fraction(1, 2 ** len(u)) for u in self.branches) != 1:
            raise WordSyntaxError(f"branches {list(self.branches)} do not form a full tree")
        inner = {u[:k] for u in self.branches for k in range(len(u))}
        object.__setattr__(self, "_carets", frozenset(inner))

    @classmethod
    def singleton(cls) -> "BinaryTree":
        return cls(("",))

    @classmethod
    def caret(cls) -> "BinaryTree":
        return cls(("0", "1"))

    @property
    def leaf_count(self) -> int:
        return len(self.branches)

    def carets(self) -> frozenset:
        """Words of the inner vertices (each one is the top of a caret)."""
        return self._carets

    def index(self, branch: str) -> int:
        return self.branches.index(branch)

    def split(self, branch: str) -> "BinaryTree":
        """Hang a caret under the leaf `branch`."""
        i = self.index(branch)
        return BinaryTree(self.branches[:i] + (branch + "0", branch + "1") + self.branches[i + 1:])


def tree_from_carets(carets: Iterable[str]) -> BinaryTree:
    """Build the tree whose inner vertices are exactly `carets` (prefix-closed)."""
    inner = set(carets)
    if not inner:
        return BinaryTree.singleton()
    for c in inner:
        if c and c[:-1] not in inner:
            raise WordSyntaxError(f"caret set is not prefix-closed at '{c}'")
    leaves = [c + d for c in inner for d in "01" if c + d not in inner]
    return BinaryTree(tuple(sorted(leaves)))


def common_refinement(a: BinaryTree, b: BinaryTree) -> BinaryTree:
    """The minimal tree having both a and b as rooted subtrees."""
    return tree_from_carets(a.carets() | b.carets())


def minimal_tree_with_branch(u: str) -> BinaryTree:
    """The minimal full binary tree that has u as a branch."""
    check_word(u)
    siblings = [u[:k] + flip(u[k]) for k in range(len(u))]
    return BinaryTree(tuple(sorted(siblings + [u])))


def branches(t: BinaryTree) -> tuple[str, ...]:
    return t.branches


def caret_count_identity_check(t: BinaryTree) -> bool:
    """Both Σℓ1 and Σℓ0 over the branches equal the caret count n−1."""
    n = t.leaf_count
    return (
        sum(ell1(u) for u in t.branches) == n - 1
        and sum(ell0(u) for u in t.branches) == n - 1
    )

"""
Rewriting - semigroup presentations of automata and the core-automaton test

Each inner vertex a with children b, c gives a relation a = bc. Whether a
vertex coincidence u+ = v+ is realised by an accepted diagram with the pair of
branches u -> v comes down to equalities of words in this semigroup, checked
here by a bounded search with a three-valued verdict.
"""

import sys
import os
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import networkx as nx

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import DEFAULT_BUDGET

from .automaton import (
    TreeAutomaton,
    read_path,
    root_is_self_descendant,
    type_clashes,
    unreduced_vertex,
)
from .errors import Unreadable
from .words import BinaryTree, minimal_tree_with_branch, tree_from_carets

Word = tuple[str, ...]
RewriteStep = tuple[int, Word, Word]
"""(position, replaced subword, replacement)."""


class Outcome(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: object = None
    reason: str = ""
    trace: tuple = ()
    spent: int = 0

    @classmethod
    def yes(cls, **kwargs) -> "Verdict":
        return cls(Outcome.YES, **kwargs)

    @classmethod
    def no(cls, witness, reason: str, **kwargs) -> "Verdict":
        return cls(Outcome.NO, witness=witness, reason=reason, **kwargs)

    @classmethod
    def unknown(cls, **kwargs) -> "Verdict":
        return cls(Outcome.UNKNOWN, **kwargs)

    @property
    def is_yes(self) -> bool:
        return self.outcome is Outcome.YES

    @property
    def is_no(self) -> bool:
        return self.outcome is Outcome.NO

    @property
    def is_unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """No beats Unknown beats Yes; the first verdict of the winning kind is kept."""
    first_unknown = None
    for verdict in verdicts:
        if verdict.is_no:
            return verdict
        if verdict.is_unknown and first_unknown is None:
            first_unknown = verdict
    return first_unknown or Verdict.yes()


# ===========================================
# Presentations and minimal trees
# ===========================================

@dataclass(frozen=True)
class SemigroupPresentation:
    alphabet: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...]

    def __str__(self) -> str:
        rels = ", ".join(f"{''.join(l) if len(l) == 1 else ' '.join(l)} = {' '.join(r)}"
                         for l, r in self.relations)
        return f"< {', '.join(self.alphabet)} | {rels} >"


def presentation_of(a: TreeAutomaton) -> SemigroupPresentation:
    relations = tuple(((v,), a.children(v)) for v in a.inner_vertices())
    return SemigroupPresentation(tuple(sorted(a.vertices)), relations)


@dataclass(frozen=True)
class MinimalTree:
    tree: BinaryTree
    labels: dict[str, str]

    def nodes(self) -> list[str]:
        """Every path of the tree (inner vertices and leaves), in shortlex order."""
        return sorted(self.labels, key=lambda w: (len(w), w))

    def leaf_labels(self) -> list[str]:
        return [self.labels[b] for b in self.tree.branches]

    def labeled_carets(self) -> set[tuple[str, str, str]]:
        return {
            (self.labels[c], self.labels[c + "0"], self.labels[c + "1"])
            for c in self.tree.carets()
        }


def minimal_tree(a: TreeAutomaton) -> MinimalTree:
    """
    Grow from the root, expanding the leftmost leaf whose label is an inner
    vertex not yet used as the label of an inner tree vertex.
    """
    labels = {"": a.root}
    carets: set[str] = set()
    used: set[str] = set()
    while True:
        for leaf in tree_from_carets(carets).branches:
            label = labels[leaf]
            if not a.is_leaf(label) and label not in used:
                break
        else:
            return MinimalTree(tree_from_carets(carets), labels)
        used.add(label)
        carets.add(leaf)
        left, right = a.children(label)
        labels[leaf + "0"] = left
        labels[leaf + "1"] = right


@dataclass(frozen=True)
class AssociatedPair:
    left: Word
    right: Word


def associated_pair(a: TreeAutomaton, u: str) -> AssociatedPair:
    """Leaf labels of the minimal tree with branch u, to the left and right of u."""
    if read_path(a, u) is None:
        raise Unreadable(f"'{u}' is not readable on the automaton")
    tree = minimal_tree_with_branch(u)
    labels = [read_path(a, b) for b in tree.branches]
    k = tree.index(u)
    return AssociatedPair(tuple(labels[:k]), tuple(labels[k + 1:]))


# ===========================================
# Word problem
# ===========================================

@lru_cache(maxsize=64)
def _end_letter_classes(p: SemigroupPresentation, end: int) -> dict[str, int]:
    """Component ids for letters linked by a = bc at the first (end=0) or last (end=-1) letter."""
    graph = nx.Graph()
    graph.add_nodes_from(p.alphabet)
    for lhs, rhs in p.relations:
        graph.add_edge(lhs[end], rhs[end])
    classes = {}
    for i, component in enumerate(nx.connected_components(graph)):
        for letter in component:
            classes[letter] = i
    return classes


def separate(p: SemigroupPresentation, w1: Sequence[str], w2: Sequence[str]) -> str | None:
    """A reason why w1 and w2 cannot be equal, from invariants of every relation."""
    w1, w2 = tuple(w1), tuple(w2)
    if w1 == w2:
        return None
    if not w1 or not w2:
        return "empty word against nonempty word"

    first = _end_letter_classes(p, 0)
    if first.get(w1[0], w1[0]) != first.get(w2[0], w2[0]):
        return f"first letters {w1[0]} and {w2[0]} are never exchanged"
    last = _end_letter_classes(p, -1)
    if last.get(w1[-1], w1[-1]) != last.get(w2[-1], w2[-1]):
        return f"last letters {w1[-1]} and {w2[-1]} are never exchanged"

    step = 0
    for lhs, rhs in p.relations:
        step = gcd(step, len(lhs) - len(rhs))
    difference = len(w1) - len(w2)
    if (step == 0 and difference) or (step > 1 and difference % step):
        return f"lengths {len(w1)} and {len(w2)} differ modulo {step}"
    return None


def _neighbours(p: SemigroupPresentation, word: Word):
    for lhs, rhs in p.relations:
        for old, new in ((lhs, rhs), (rhs, lhs)):
            n = len(old)
            for i in range(len(word) - n + 1):
                if word[i:i + n] == old:
                    yield (i, old, new), word[:i] + new + word[i + n:]


def replay(word: Sequence[str], trace: Iterable[RewriteStep]) -> Word:
    """Apply a rewrite trace step by step, checking every step matches."""
    word = tuple(word)
    for i, old, new in trace:
        if word[i:i + len(old)] != tuple(old):
            raise ValueError(f"step at {i} expects {' '.join(old)} in {' '.join(word)}")
        word = word[:i] + tuple(new) + word[i + len(old):]
    return word


def _trace_between(parents: list[dict], meet: Word) -> tuple[RewriteStep, ...]:
    forward = []
    word = meet
    while parents[0][word] is not None:
        word, step = parents[0][word]
        forward.append(step)
    forward.reverse()
    backward = []
    word = meet
    while parents[1][word] is not None:
        previous, (i, old, new) = parents[1][word]
        backward.append((i, new, old))
        word = previous
    return tuple(forward + backward)


def words_equal(
    p: SemigroupPresentation,
    w1: Sequence[str],
    w2: Sequence[str],
    budget: int = DEFAULT_BUDGET,
) -> Verdict:
    """
    Decide w1 = w2 in the semigroup of p by breadth-first search from both ends.

    Yes carries a rewrite trace from w1 to w2. No comes from a separator or from
    exhausting one of the two equivalence classes. Unknown means the budget of
    node expansions ran out.
    """
    w1, w2 = tuple(w1), tuple(w2)
    if w1 == w2:
        return Verdict.yes(witness=(w1, w2))
    reason = separate(p, w1, w2)
    if reason:
        return Verdict.no((w1, w2), reason)

    parents: list[dict] = [{w1: None}, {w2: None}]
    frontiers = [deque([w1]), deque([w2])]
    spent = 0
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        if spent >= budget:
            return Verdict.unknown(witness=(w1, w2), reason="budget exhausted", spent=spent)
        word = frontiers[side].popleft()
        spent += 1
        for step, neighbour in _neighbours(p, word):
            if neighbour in parents[side]:
                continue
            parents[side][neighbour] = (word, step)
            if neighbour in parents[1 - side]:
                return Verdict.yes(
                    witness=(w1, w2),
                    trace=_trace_between(parents, neighbour),
                    spent=spent,
                )
            frontiers[side].append(neighbour)
    return Verdict.no((w1, w2), "equivalence class exhausted", spent=spent)


# ===========================================
# Core-automaton test
# ===========================================

def _label_pairs(tree: MinimalTree) -> list[tuple[str, str]]:
    nodes = tree.nodes()
    return [
        (u, v)
        for i, u in enumerate(nodes)
        for v in nodes[i + 1:]
        if tree.labels[u] == tree.labels[v]
    ]


def is_core_automaton(
    a: TreeAutomaton,
    budget: int = DEFAULT_BUDGET,
    verbose: bool = False,
) -> Verdict:
    """
    Whether a is isomorphic to the core of some subgroup of F.

    No carries a vertex (structural checks) or a pair of tree paths (u, v)
    whose associated words differ; the reason names the failing check.
    """
    if root_is_self_descendant(a):
        return Verdict.no(a.root, "root is a descendant of itself")
    clashes = type_clashes(a)
    if clashes:
        return Verdict.no(clashes[0], "vertex is reachable under two types")
    stuck = unreduced_vertex(a)
    if stuck is not None:
        return Verdict.no(stuck, "automaton is not reduced")

    p = presentation_of(a)
    pairs = []
    for u, v in _label_pairs(minimal_tree(a)):
        pu, pv = associated_pair(a, u), associated_pair(a, v)
        pairs.append(((u, v), (("p", pu.left, pv.left), ("q", pu.right, pv.right))))
    if verbose:
        print(f"  ✓ {len(pairs)} label-sharing path pairs to check")

    for witness, sides in pairs:
        for name, x, y in sides:
            reason = separate(p, x, y)
            if reason:
                return Verdict.no(witness, f"{name}_u != {name}_v: {reason}")

    verdicts = []
    for witness, sides in pairs:
        for name, x, y in sides:
            verdict = words_equal(p, x, y, budget)
            if verdict.is_no:
                return Verdict.no(witness, f"{name}_u != {name}_v: {verdict.reason}", spent=verdict.spent)
            if verdict.is_unknown:
                verdicts.append(Verdict.unknown(witness=witness, reason=f"{name}_u = {name}_v undecided",
                                                spent=verdict.spent))
                if verbose:
                    print(f"  ✗ {witness}: {name}-words undecided within budget")
    return combine(verdicts)

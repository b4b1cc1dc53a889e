"""
Automaton - rooted tree-automata

A rooted tree-automaton is a finite directed graph with a root where
  (1) every vertex has zero or two outgoing edges,
  (2) the two outgoing edges are labeled 0 and 1,
  (3) no two distinct vertices have the same ordered pair of children,
  (4) every vertex is reachable from the root.
A word u is readable when it labels a path from the root; u+ is its end vertex.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

import networkx as nx

from .congruence import Congruence
from .element import TreeDiagram, reduce
from .errors import AutomatonError, CapExceeded, NotALeaf
from .words import BinaryTree

Edges = Mapping[tuple[str, int], str]


class VertexType(str, Enum):
    ROOT = "root"
    LEFT = "left"
    RIGHT = "right"
    MIDDLE = "middle"


class TreeAutomaton:
    """An immutable rooted tree-automaton with string vertex ids."""

    def __init__(self, root: str, edges: Edges, vertices: Iterable[str] = ()):
        self.root = root
        self._edges: dict[tuple[str, int], str] = dict(edges)
        found = {root, *vertices}
        for (src, _), dst in self._edges.items():
            found.add(src)
            found.add(dst)
        self.vertices = frozenset(found)
        self._validate()

    def _validate(self):
        for (src, digit), _ in self._edges.items():
            if digit not in (0, 1):
                raise AutomatonError(f"edge from '{src}' has label {digit!r}, expected 0 or 1")
            if (src, 1 - digit) not in self._edges:
                raise AutomatonError(f"vertex '{src}' has exactly one outgoing edge")

        fathers: dict[tuple[str, str], str] = {}
        for v in self.inner_vertices():
            kids = self.children(v)
            if kids in fathers:
                raise AutomatonError(
                    f"vertices '{fathers[kids]}' and '{v}' have the same children {kids}"
                )
            fathers[kids] = v

        seen = {self.root}
        queue = deque([self.root])
        while queue:
            kids = self.children(queue.popleft())
            for child in kids or ():
                if child not in seen:
                    seen.add(child)
                    queue.append(child)
        unreachable = self.vertices - seen
        if unreachable:
            raise AutomatonError(f"unreachable from the root: {', '.join(sorted(unreachable))}")

    @property
    def edges(self) -> dict[tuple[str, int], str]:
        return dict(self._edges)

    def children(self, v: str) -> tuple[str, str] | None:
        if (v, 0) not in self._edges:
            return None
        return self._edges[(v, 0)], self._edges[(v, 1)]

    def is_leaf(self, v: str) -> bool:
        return (v, 0) not in self._edges

    def inner_vertices(self) -> list[str]:
        return sorted(v for v in self.vertices if not self.is_leaf(v))

    def to_networkx(self) -> nx.MultiDiGraph:
        """One edge per (vertex, digit); parallel edges are kept apart by their key."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for (src, digit), dst in self._edges.items():
            graph.add_edge(src, dst, key=digit, label=str(digit))
        return graph

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"TreeAutomaton(root={self.root!r}, vertices={len(self.vertices)}, edges={len(self._edges)})"


@dataclass(frozen=True)
class Morphism:
    mapping: dict[str, str]
    surjective: bool


# ===========================================
# Small constructors
# ===========================================

def single_vertex(root: str = "r") -> TreeAutomaton:
    return TreeAutomaton(root, {})


def thompson_core() -> TreeAutomaton:
    """C(F): root, a left and a right vertex, and one middle vertex with two loops."""
    return TreeAutomaton("r", {
        ("r", 0): "L", ("r", 1): "R",
        ("L", 0): "L", ("L", 1): "M",
        ("R", 0): "M", ("R", 1): "R",
        ("M", 0): "M", ("M", 1): "M",
    })


def from_binary_tree(t: BinaryTree) -> TreeAutomaton:
    """A finite binary tree viewed as an automaton; vertex ids are 't' + word."""
    edges = {}
    for c in t.carets():
        edges[("t" + c, 0)] = "t" + c + "0"
        edges[("t" + c, 1)] = "t" + c + "1"
    return TreeAutomaton("t", edges)


# ===========================================
# Paths, acceptance and vertex structure
# ===========================================

def read_path(a: TreeAutomaton, u: str) -> str | None:
    """u+ if u is readable on a, else None."""
    v = a.root
    for digit in u:
        kids = a.children(v)
        if kids is None:
            return None
        v = kids[int(digit)]
    return v


def shortest_words(a: TreeAutomaton) -> dict[str, str]:
    """For each vertex, the shortlex-least word reading to it."""
    words = {a.root: ""}
    queue = deque([a.root])
    while queue:
        v = queue.popleft()
        for digit, child in enumerate(a.children(v) or ()):
            if child not in words:
                words[child] = words[v] + str(digit)
                queue.append(child)
    return words


def accepts(a: TreeAutomaton, d: TreeDiagram) -> bool:
    for u, v in reduce(d).pairs:
        end = read_path(a, u)
        if end is None or end != read_path(a, v):
            return False
    return True


def leaves(a: TreeAutomaton) -> list[str]:
    return sorted(v for v in a.vertices if a.is_leaf(v))


def is_full(a: TreeAutomaton) -> bool:
    return not leaves(a)


_TYPE_STEP = {
    (VertexType.ROOT, 0): VertexType.LEFT,
    (VertexType.ROOT, 1): VertexType.RIGHT,
    (VertexType.LEFT, 0): VertexType.LEFT,
    (VertexType.LEFT, 1): VertexType.MIDDLE,
    (VertexType.RIGHT, 0): VertexType.MIDDLE,
    (VertexType.RIGHT, 1): VertexType.RIGHT,
    (VertexType.MIDDLE, 0): VertexType.MIDDLE,
    (VertexType.MIDDLE, 1): VertexType.MIDDLE,
}


def vertex_types(a: TreeAutomaton) -> dict[str, frozenset]:
    """Every type under which each vertex is reachable."""
    seen = {(a.root, VertexType.ROOT)}
    queue = deque(seen)
    while queue:
        v, kind = queue.popleft()
        kids = a.children(v)
        if kids is None:
            continue
        for digit, child in enumerate(kids):
            state = (child, _TYPE_STEP[(kind, digit)])
            if state not in seen:
                seen.add(state)
                queue.append(state)
    types: dict[str, set] = {v: set() for v in a.vertices}
    for v, kind in seen:
        types[v].add(kind)
    return {v: frozenset(kinds) for v, kinds in types.items()}


def type_clashes(a: TreeAutomaton) -> list[str]:
    return sorted(v for v, kinds in vertex_types(a).items() if len(kinds) > 1)


def middle_vertices(a: TreeAutomaton) -> list[str]:
    return sorted(v for v, kinds in vertex_types(a).items() if VertexType.MIDDLE in kinds)


def descendants(a: TreeAutomaton, v: str, graph: nx.MultiDiGraph | None = None) -> set[str]:
    """Ends of nonempty trails from v (v itself included when it lies on a cycle)."""
    graph = graph if graph is not None else a.to_networkx()
    found = set()
    for child in graph.successors(v):
        found.add(child)
        found |= nx.descendants(graph, child)
    return found


def unreduced_vertex(a: TreeAutomaton) -> str | None:
    """
    A vertex that is not a leaf, not its own descendant, and has no descendant
    with two incoming edges; None when the automaton is reduced.
    """
    graph = a.to_networkx()
    for v in a.inner_vertices():
        below = descendants(a, v, graph)
        if v in below:
            continue
        if any(graph.in_degree(y) >= 2 for y in below):
            continue
        return v
    return None


def is_reduced(a: TreeAutomaton) -> bool:
    return unreduced_vertex(a) is None


def root_is_self_descendant(a: TreeAutomaton) -> bool:
    return a.root in descendants(a, a.root)


# ===========================================
# Morphisms and isomorphism
# ===========================================

def find_morphism(src: TreeAutomaton, dst: TreeAutomaton) -> Morphism | None:
    """The unique root-preserving morphism src -> dst, found by walking both in parallel."""
    mapping = {src.root: dst.root}
    queue = deque([src.root])
    while queue:
        x = queue.popleft()
        kids = src.children(x)
        if kids is None:
            continue
        images = dst.children(mapping[x])
        if images is None:
            return None
        for child, image in zip(kids, images):
            if child in mapping:
                if mapping[child] != image:
                    return None
            else:
                mapping[child] = image
                queue.append(child)

    covered_edges = {(mapping[x], digit) for x in src.inner_vertices() for digit in (0, 1)}
    surjective = (
        set(mapping.values()) == set(dst.vertices)
        and covered_edges == set(dst.edges)
    )
    return Morphism(mapping, surjective)


def _bfs_order(a: TreeAutomaton) -> list[str]:
    order = [a.root]
    index = {a.root: 0}
    i = 0
    while i < len(order):
        for child in a.children(order[i]) or ():
            if child not in index:
                index[child] = len(order)
                order.append(child)
        i += 1
    return order


def canonical_form(a: TreeAutomaton) -> tuple:
    """BFS numbering from the root, 0-child before 1-child; equal iff isomorphic."""
    order = _bfs_order(a)
    index = {v: i for i, v in enumerate(order)}
    encoding = []
    for v in order:
        kids = a.children(v)
        encoding.append(None if kids is None else (index[kids[0]], index[kids[1]]))
    return tuple(encoding)


def is_isomorphic(a: TreeAutomaton, b: TreeAutomaton) -> bool:
    return canonical_form(a) == canonical_form(b)


def canonical_relabel(a: TreeAutomaton) -> TreeAutomaton:
    """Rename vertices v0, v1, ... in canonical order."""
    names = {v: f"v{i}" for i, v in enumerate(_bfs_order(a))}
    return TreeAutomaton(
        names[a.root],
        {(names[src], digit): names[dst] for (src, digit), dst in a.edges.items()},
    )


# ===========================================
# Quotients
# ===========================================

def _edge_list(a: TreeAutomaton) -> list[tuple[str, int, str]]:
    return [(src, digit, dst) for (src, digit), dst in sorted(a.edges.items())]


def quotient_by(a: TreeAutomaton, pairs: Iterable[tuple[str, str]]) -> TreeAutomaton:
    """The image of a under the smallest congruence identifying the given pairs."""
    congruence = Congruence(sorted(a.vertices), _edge_list(a))
    congruence.merge_all(pairs)
    return TreeAutomaton(congruence.find(a.root), congruence.quotient_edges())


def enumerate_quotients(
    a: TreeAutomaton,
    cap: int,
    verbose: bool = False,
) -> list[TreeAutomaton]:
    """
    All pairwise non-isomorphic surjective images of a, relabeled canonically.

    Every congruence is a join of principal ones, so the search starts from the
    principal congruences of all vertex pairs and keeps joining with them until
    no new partition appears.
    """
    vertices = sorted(a.vertices)
    edges = _edge_list(a)

    def close(pairs):
        congruence = Congruence(vertices, edges)
        congruence.merge_all(pairs)
        return congruence

    principal = {}
    for i, x in enumerate(vertices):
        for y in vertices[i + 1:]:
            congruence = close([(x, y)])
            principal.setdefault(congruence.partition(), congruence)
    if verbose:
        print(f"  ✓ {len(principal)} principal congruences on {len(vertices)} vertices")

    images: dict[tuple, TreeAutomaton] = {}

    def record(congruence):
        image = canonical_relabel(TreeAutomaton(congruence.find(a.root), congruence.quotient_edges()))
        images.setdefault(canonical_form(image), image)
        if len(images) > cap:
            raise CapExceeded(f"more than {cap} distinct quotients")

    identity = close([])
    visited = {identity.partition()}
    record(identity)
    queue = deque(principal.values())
    while queue:
        congruence = queue.popleft()
        partition = congruence.partition()
        if partition in visited:
            continue
        visited.add(partition)
        record(congruence)
        for generator in principal.values():
            joined = close(congruence.generating_pairs() + generator.generating_pairs())
            if joined.partition() not in visited:
                queue.append(joined)

    if verbose:
        print(f"  ✓ {len(visited)} congruences, {len(images)} distinct quotients")
    return sorted(images.values(), key=lambda q: (-len(q), canonical_form(q)))


# ===========================================
# Surgery
# ===========================================

def attach(host: TreeAutomaton, leaf: str, guest: TreeAutomaton) -> TreeAutomaton:
    """Fuse the guest's root onto a leaf of the host; the host's root stays the root."""
    if leaf not in host.vertices or not host.is_leaf(leaf):
        raise NotALeaf(f"'{leaf}' is not a leaf of the host automaton")
    taken = set(host.vertices)
    names = {guest.root: leaf}
    for v in sorted(guest.vertices - {guest.root}):
        name = f"{leaf}_{v}"
        while name in taken:
            name += "_"
        taken.add(name)
        names[v] = name
    edges = host.edges
    for (src, digit), dst in guest.edges.items():
        edges[(names[src], digit)] = names[dst]
    return TreeAutomaton(host.root, edges, host.vertices)


def fill_leaves(a: TreeAutomaton) -> TreeAutomaton:
    """Attach a fresh copy of C(F) at every leaf."""
    result = a
    for leaf in leaves(a):
        result = attach(result, leaf, thompson_core())
    return result

"""
Core - the core C(H) of a finitely generated subgroup H of F

Each generator (T+, T-) is glued into a sphere: T+ and T- share their root and
their i-th leaves are identified. The spheres share one root, and the graph is
folded until no vertex has two same-labeled outgoing edges and no two vertices
have the same children.
"""

from typing import Iterable

from .automaton import (
    TreeAutomaton,
    accepts,
    canonical_relabel,
    is_full,
    leaves,
    middle_vertices,
    shortest_words,
    single_vertex,
)
from .congruence import Congruence
from .element import X0, X1, TreeDiagram, copy_in, is_reduced, reduce
from .errors import NotReduced

ROOT = "r"


def _sphere(k: int, g: TreeDiagram) -> tuple[list[str], list[tuple[str, int, str]], list[tuple[str, str]]]:
    """Vertices, edges and leaf identifications for the k-th generator."""
    def name(side: str, word: str) -> str:
        return ROOT if not word else f"g{k}{side}{word}"

    vertices, edges = [], []
    for side, tree in (("p", g.domain_tree), ("m", g.range_tree)):
        for word in sorted(tree.carets()) + list(tree.branches):
            vertices.append(name(side, word))
        for c in tree.carets():
            edges.append((name(side, c), 0, name(side, c + "0")))
            edges.append((name(side, c), 1, name(side, c + "1")))
    glue = [(name("p", u), name("m", v)) for u, v in g.pairs]
    return vertices, edges, glue


def build_core(gens: Iterable[TreeDiagram], verbose: bool = False) -> TreeAutomaton:
    """Glue every generator into a sphere, fuse the roots, and fold."""
    gens = list(gens)
    for i, g in enumerate(gens):
        if not is_reduced(g):
            raise NotReduced(f"generator {i} is not reduced: {g}")
    if not gens:
        return canonical_relabel(single_vertex(ROOT))

    vertices, edges, glue = [ROOT], [], []
    for k, g in enumerate(gens):
        v, e, p = _sphere(k, g)
        vertices.extend(v)
        edges.extend(e)
        glue.extend(p)

    folded = Congruence(dict.fromkeys(vertices), edges)
    folded.merge_all(glue)
    core = canonical_relabel(TreeAutomaton(folded.find(ROOT), folded.quotient_edges()))
    if verbose:
        print(f"  ✓ folded {len(vertices)} glued vertices into a core with {len(core)} vertices")
    return core


def closure_contains(core: TreeAutomaton, f: TreeDiagram) -> bool:
    """Membership in Cl(H): the reduced diagram of f is accepted by C(H)."""
    return accepts(core, reduce(f))


def closure_contains_derived(core: TreeAutomaton) -> bool:
    """[F,F] ⊆ Cl(H) iff the core has a unique middle vertex and it is inner."""
    middles = middle_vertices(core)
    return len(middles) == 1 and not core.is_leaf(middles[0])


def finitely_many_dyadic_orbits(core: TreeAutomaton) -> bool:
    return is_full(core)


def full_extension_generators(gens: Iterable[TreeDiagram]) -> list[TreeDiagram]:
    """
    H plus copies of x0 and x1 in [u] for a path u to each leaf of C(H).

    The core of the subgroup they generate is C(H) with a copy of C(F)
    hanging from every leaf.
    """
    gens = [reduce(g) for g in gens]
    core = build_core(gens)
    paths = shortest_words(core)
    extra = []
    for leaf in leaves(core):
        extra.append(copy_in(paths[leaf], X0))
        extra.append(copy_in(paths[leaf], X1))
    return gens + extra

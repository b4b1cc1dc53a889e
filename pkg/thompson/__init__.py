"""
Thompson's group F toolkit

Tree-diagrams, rooted tree-automata and the cores of finitely generated
subgroups of F, with the decision procedures built on them.
"""

from .errors import (
    ThompsonError,
    WordSyntaxError,
    FormatError,
    AutomatonError,
    NotReduced,
    Unreadable,
    NotALeaf,
    CapExceeded,
    JonesParameterError,
)

from .words import (
    DyadicFraction,
    BinaryTree,
    ell0,
    ell1,
    branches,
    caret_count_identity_check,
    minimal_tree_with_branch,
    tree_from_carets,
)

from .element import (
    TreeDiagram,
    AbelianImage,
    make_x,
    reduce,
    multiply,
    invert,
    evaluate,
    slope_right,
    slope_left,
    abelianize,
    copy_in,
    direct_sum,
    tuple_sequence,
    parse_word,
    format_word,
    word_to_diagram,
    diagram_of,
)

from .automaton import (
    TreeAutomaton,
    VertexType,
    Morphism,
    read_path,
    accepts,
    vertex_types,
    is_reduced,
    find_morphism,
    canonical_form,
    canonical_relabel,
    is_isomorphic,
    enumerate_quotients,
    attach,
    fill_leaves,
    thompson_core,
    is_full,
)

from .core import (
    build_core,
    closure_contains,
    closure_contains_derived,
    finitely_many_dyadic_orbits,
    full_extension_generators,
)

from .rewriting import (
    SemigroupPresentation,
    MinimalTree,
    AssociatedPair,
    Verdict,
    Outcome,
    presentation_of,
    minimal_tree,
    associated_pair,
    words_equal,
    is_core_automaton,
)

from .decide import (
    AbelianSubgroup,
    MaximalityReport,
    MaximalityOutcome,
    abelian_subgroup,
    is_closed_abelian,
    is_generating,
    maximality_verdict,
    contains_derived_subgroup,
    in_rectangular,
)

from .jones import (
    JonesParameter,
    sum_p,
    suf_p,
    a_sum,
    a_suf,
    jones_generators,
    jones_pair_exists,
    verify_jones_core,
)

__all__ = [
    # Errors
    "ThompsonError",
    "WordSyntaxError",
    "FormatError",
    "AutomatonError",
    "NotReduced",
    "Unreadable",
    "NotALeaf",
    "CapExceeded",
    "JonesParameterError",
    # Words
    "DyadicFraction",
    "BinaryTree",
    "ell0",
    "ell1",
    "branches",
    "caret_count_identity_check",
    "minimal_tree_with_branch",
    "tree_from_carets",
    # Elements
    "TreeDiagram",
    "AbelianImage",
    "make_x",
    "reduce",
    "multiply",
    "invert",
    "evaluate",
    "slope_right",
    "slope_left",
    "abelianize",
    "copy_in",
    "direct_sum",
    "tuple_sequence",
    "parse_word",
    "format_word",
    "word_to_diagram",
    "diagram_of",
    # Automata
    "TreeAutomaton",
    "VertexType",
    "Morphism",
    "read_path",
    "accepts",
    "vertex_types",
    "is_reduced",
    "find_morphism",
    "canonical_form",
    "canonical_relabel",
    "is_isomorphic",
    "enumerate_quotients",
    "attach",
    "fill_leaves",
    "thompson_core",
    "is_full",
    # Cores
    "build_core",
    "closure_contains",
    "closure_contains_derived",
    "finitely_many_dyadic_orbits",
    "full_extension_generators",
    # Rewriting
    "SemigroupPresentation",
    "MinimalTree",
    "AssociatedPair",
    "Verdict",
    "Outcome",
    "presentation_of",
    "minimal_tree",
    "associated_pair",
    "words_equal",
    "is_core_automaton",
    # Decisions
    "AbelianSubgroup",
    "MaximalityReport",
    "MaximalityOutcome",
    "abelian_subgroup",
    "is_closed_abelian",
    "is_generating",
    "maximality_verdict",
    "contains_derived_subgroup",
    "in_rectangular",
    # Jones subgroups
    "JonesParameter",
    "sum_p",
    "suf_p",
    "a_sum",
    "a_suf",
    "jones_generators",
    "jones_pair_exists",
    "verify_jones_core",
]

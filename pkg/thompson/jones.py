"""
Jones - the Jones subgroups F→_p for a prime p

F→_p preserves the digit sum modulo p of dyadic fractions. It is the diagram
group of two small automata: A^sum tracks the digit sum mod p, A^suf the
length mod p of the trailing run of ones.
"""

import sys
import os
from collections import Counter
from dataclasses import dataclass, field

from sympy import isprime

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import MAX_JONES_PRIME

from .automaton import TreeAutomaton, find_morphism, is_full, vertex_types
from .core import build_core
from .element import TreeDiagram, make_x, multiply
from .errors import JonesParameterError
from .words import DyadicFraction, ell1


@dataclass(frozen=True)
class JonesParameter:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool) or not isprime(self.p):
            raise JonesParameterError(f"Jones parameter must be a prime (got {self.p!r})")


def _prime(p: "int | JonesParameter") -> int:
    return p.p if isinstance(p, JonesParameter) else JonesParameter(p).p


def sum_p(u: str, p: "int | JonesParameter") -> int:
    return u.count("1") % _prime(p)


def suf_p(u: str, p: "int | JonesParameter") -> int:
    return ell1(u) % _prime(p)


def jones_orbit(alpha: DyadicFraction, p: "int | JonesParameter") -> int:
    """Index of the F→_p-orbit of alpha; there are exactly p orbits."""
    return sum_p(alpha.word, p)


def a_sum(p: "int | JonesParameter") -> TreeAutomaton:
    """Vertices a0..a{p-1}: a 0-loop at each, and a 1-edge from a_i to a_{i+1}."""
    p = _prime(p)
    edges = {}
    for i in range(p):
        edges[(f"a{i}", 0)] = f"a{i}"
        edges[(f"a{i}", 1)] = f"a{(i + 1) % p}"
    return TreeAutomaton("a0", edges)


def a_suf(p: "int | JonesParameter") -> TreeAutomaton:
    """Vertices b0..b{p-1}: every 0-edge goes to b0, and a 1-edge from b_i to b_{i+1}."""
    p = _prime(p)
    edges = {}
    for i in range(p):
        edges[(f"b{i}", 0)] = "b0"
        edges[(f"b{i}", 1)] = f"b{(i + 1) % p}"
    return TreeAutomaton("b0", edges)


def jones_generators(p: "int | JonesParameter") -> list[TreeDiagram]:
    """x_i x_{i+1} ... x_{i+p-1} for i = 0..p."""
    p = _prime(p)
    gens = []
    for i in range(p + 1):
        g = make_x(i)
        for j in range(i + 1, i + p):
            g = multiply(g, make_x(j))
        gens.append(g)
    return gens


def jones_pair_exists(u: str, v: str, p: "int | JonesParameter") -> bool:
    """Whether some element of F→_p has the pair of branches u -> v."""
    return (
        ("0" in u) == ("0" in v)
        and ("1" in u) == ("1" in v)
        and sum_p(u, p) == sum_p(v, p)
        and suf_p(u, p) == suf_p(v, p)
    )


@dataclass
class JonesCoreReport:
    p: int
    core: TreeAutomaton
    vertex_count: int
    census: dict[str, int]
    onto_sum: bool
    onto_suf: bool
    full: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        p = self.p
        out = [
            f"p = {p}",
            f"  vertices: {self.vertex_count} (expected {p * p + p + 2})",
            "  types: " + ", ".join(f"{k}={self.census.get(k, 0)}" for k in ("root", "left", "right", "middle")),
            f"  {'✓' if self.onto_sum else '✗'} surjective morphism onto A^sum",
            f"  {'✓' if self.onto_suf else '✗'} surjective morphism onto A^suf",
            f"  {'✓' if self.full else '✗'} no leaves",
        ]
        out.extend(f"  ✗ {failure}" for failure in self.failures)
        return out


def verify_jones_core(p: "int | JonesParameter", verbose: bool = False) -> JonesCoreReport:
    """Build C(F→_p) and check it against the expected structure."""
    p = _prime(p)
    if p > MAX_JONES_PRIME:
        raise JonesParameterError(f"p = {p} exceeds FCORE_MAX_JONES_PRIME = {MAX_JONES_PRIME}")

    core = build_core(jones_generators(p), verbose=verbose)
    census: Counter = Counter()
    for kinds in vertex_types(core).values():
        census["/".join(sorted(k.value for k in kinds)) if len(kinds) > 1 else next(iter(kinds)).value] += 1

    onto = {}
    for name, target in (("A^sum", a_sum(p)), ("A^suf", a_suf(p))):
        morphism = find_morphism(core, target)
        onto[name] = morphism is not None and morphism.surjective

    failures = []
    expected_count = p * p + p + 2
    if len(core) != expected_count:
        failures.append(f"vertex count {len(core)} != {expected_count}")
    for kind, expected in (("root", 1), ("left", 1), ("right", p), ("middle", p * p)):
        if census.get(kind, 0) != expected:
            failures.append(f"{kind} vertices {census.get(kind, 0)} != {expected}")
    for name, ok in onto.items():
        if not ok:
            failures.append(f"no surjective morphism onto {name}")
    full = is_full(core)
    if not full:
        failures.append("core has leaves")

    if verbose:
        print(f"  {'✓' if not failures else '✗'} p = {p}: {len(core)} vertices")
    return JonesCoreReport(p, core, len(core), dict(census), onto["A^sum"], onto["A^suf"], full, failures)

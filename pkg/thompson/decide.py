"""
Decide - generation, abelian images and maximality

The abelianization of F sends f to (log2 f'(0+), log2 f'(1-)). A subgroup of
Z^2 is closed when it has the form pZ x qZ. The generation problem needs only
the abelian image and the core; maximality of infinite index is read off the
core and its quotients.
"""

import sys
import os
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Iterable

try:
    from sympy import igcdex
except ImportError:  # sympy >= 1.13 moved it out of the top-level namespace
    from sympy.core.intfunc import igcdex

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import DEFAULT_BUDGET, QUOTIENT_CAP

from .automaton import (
    TreeAutomaton,
    canonical_relabel,
    enumerate_quotients,
    is_full,
    is_isomorphic,
    middle_vertices,
    thompson_core,
)
from .core import build_core, closure_contains_derived
from .element import TreeDiagram, abelianize, reduce
from .formats import format_automaton
from .rewriting import Verdict, is_core_automaton

CLOSURE_CAVEAT = (
    "The verdict concerns Cl(H), the closed subgroup accepted by the core; "
    "it applies to H itself only when H = Cl(H), which is not checked here."
)


# ===========================================
# Subgroups of Z^2
# ===========================================

@dataclass(frozen=True)
class AbelianSubgroup:
    """
    The subgroup of Z^2 generated by `generators`, kept in the echelon basis
    (a, b), (0, c) with a, c >= 0 and 0 <= b < c when c > 0.
    """

    generators: tuple[tuple[int, int], ...]
    a: int = field(init=False)
    b: int = field(init=False)
    c: int = field(init=False)

    def __post_init__(self):
        a, b, c = 0, 0, 0
        for x, y in self.generators:
            if x == 0:
                c = gcd(c, y)
                continue
            # combine (a, b) and (x, y) into one row with first entry gcd(a, x)
            s, t, g = (int(n) for n in igcdex(a, x))
            new_b = s * b + t * y
            # the other combination has first entry 0
            c = gcd(c, (x // g) * b - (a // g) * y)
            a, b = g, new_b
        if c:
            b %= c
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))
        object.__setattr__(self, "c", int(c))

    @classmethod
    def of(cls, vectors: Iterable[tuple[int, int]]) -> "AbelianSubgroup":
        return cls(tuple((int(x), int(y)) for x, y in vectors))

    def contains(self, vector: tuple[int, int]) -> bool:
        x, y = vector
        if self.a == 0:
            if x != 0:
                return False
        else:
            if x % self.a:
                return False
            y -= (x // self.a) * self.b
        return y == 0 if self.c == 0 else y % self.c == 0

    def is_full(self) -> bool:
        return self.a == 1 and self.c == 1

    def is_trivial(self) -> bool:
        return self.a == 0 and self.c == 0

    def coordinate_gcds(self) -> tuple[int, int]:
        p = q = 0
        for x, y in self.generators:
            p, q = gcd(p, x), gcd(q, y)
        return p, q

    def __str__(self) -> str:
        return f"<({self.a},{self.b}), (0,{self.c})>"


def abelian_subgroup(gens: Iterable[TreeDiagram]) -> AbelianSubgroup:
    return AbelianSubgroup.of(abelianize(g) for g in gens)


def is_closed_abelian(k: AbelianSubgroup) -> tuple[bool, tuple[int, int] | None]:
    """K is closed iff K = pZ x qZ for the coordinate gcds p, q."""
    p, q = k.coordinate_gcds()
    if k.contains((p, 0)) and k.contains((0, q)):
        return True, (p, q)
    return False, None


def in_rectangular(f: TreeDiagram, p: int, q: int) -> bool:
    """Membership in F_{p,q}, the preimage of pZ x qZ (0Z = {0})."""
    x, y = abelianize(f)
    return (x == 0 if p == 0 else x % p == 0) and (y == 0 if q == 0 else y % q == 0)


# ===========================================
# Generation
# ===========================================

def is_generating(gens: Iterable[TreeDiagram]) -> bool:
    """H = F iff H[F,F] = F and [F,F] ⊆ Cl(H)."""
    gens = [reduce(g) for g in gens]
    if not abelian_subgroup(gens).is_full():
        return False
    return closure_contains_derived(build_core(gens))


def contains_derived_subgroup(gens: Iterable[TreeDiagram]) -> Verdict:
    """
    Whether H contains [F,F]. Yes carries (p, q) with H = F_{p,q}; No comes from
    the closure failing to contain [F,F]; a non-closed image gives Unknown.
    """
    gens = [reduce(g) for g in gens]
    if not closure_contains_derived(build_core(gens)):
        return Verdict.no(None, "Cl(H) does not contain [F,F]")
    closed, pq = is_closed_abelian(abelian_subgroup(gens))
    if closed:
        return Verdict.yes(witness=pq, reason=f"H = F_{{{pq[0]},{pq[1]}}}")
    return Verdict.unknown(reason="abelian image is not closed")


# ===========================================
# Maximality
# ===========================================

class MaximalityOutcome(str, Enum):
    MAXIMAL_INFINITE_INDEX = "maximal, infinite index"
    NOT_MAXIMAL = "not maximal of infinite index"
    UNKNOWN = "unknown"


@dataclass
class QuotientRecord:
    automaton: TreeAutomaton
    verdict: Verdict | None
    note: str = ""


@dataclass
class MaximalityReport:
    core: TreeAutomaton
    conditions: dict[int, bool | None]
    census: list[QuotientRecord]
    outcome: MaximalityOutcome
    witness: TreeAutomaton | None = None
    reason: str = ""
    caveat: str = CLOSURE_CAVEAT

    def lines(self) -> list[str]:
        names = {
            1: "abelian image is Z^2",
            2: "core has no leaves",
            3: "more than one middle vertex",
            4: "no proper quotient other than C(F) is a core automaton",
        }
        out = [f"core: {len(self.core)} vertices"]
        for k in sorted(names):
            flag = self.conditions.get(k)
            mark = "✓" if flag else ("✗" if flag is False else "-")
            out.append(f"  {mark} ({k}) {names[k]}")
        if self.census:
            out.append(f"quotients: {len(self.census)}")
            for i, record in enumerate(self.census):
                verdict = record.verdict.outcome.value if record.verdict else "-"
                detail = record.note or (record.verdict.reason if record.verdict else "")
                out.append(f"  #{i:<3} {len(record.automaton):>3} vertices  {verdict:<8} {detail}")
        out.append(f"verdict: {self.outcome.value}")
        if self.reason:
            out.append(f"reason: {self.reason}")
        if self.witness is not None:
            out.append(f"witness: quotient with {len(self.witness)} vertices")
            out.extend("  " + line for line in format_automaton(canonical_relabel(self.witness)).splitlines())
        out.append(f"note: {self.caveat}")
        return out


def maximality_verdict(
    gens: Iterable[TreeDiagram],
    budget: int = DEFAULT_BUDGET,
    cap: int = QUOTIENT_CAP,
    verbose: bool = False,
) -> MaximalityReport:
    """
    Check the four conditions characterising closed maximal subgroups of
    infinite index. Later conditions are skipped once one fails.
    """
    gens = [reduce(g) for g in gens]
    core = build_core(gens)
    conditions: dict[int, bool | None] = {1: None, 2: None, 3: None, 4: None}

    def stop(k: int, reason: str) -> MaximalityReport:
        conditions[k] = False
        if verbose:
            print(f"  ✗ condition ({k}) fails: {reason}")
        return MaximalityReport(core, conditions, [], MaximalityOutcome.NOT_MAXIMAL, reason=reason)

    image = abelian_subgroup(gens)
    if not image.is_full():
        return stop(1, f"abelian image {image} is not Z^2")
    conditions[1] = True
    if not is_full(core):
        return stop(2, "the core has leaves")
    conditions[2] = True
    if len(middle_vertices(core)) <= 1:
        return stop(3, "the core has a unique middle vertex")
    conditions[3] = True
    if verbose:
        print("  ✓ conditions (1)-(3) hold; enumerating quotients")

    f_core = thompson_core()
    census = []
    verdicts = []
    for quotient in enumerate_quotients(core, cap, verbose=verbose):
        if is_isomorphic(quotient, core):
            census.append(QuotientRecord(quotient, None, "the core itself"))
            continue
        if is_isomorphic(quotient, f_core):
            census.append(QuotientRecord(quotient, None, "C(F)"))
            continue
        verdict = is_core_automaton(quotient, budget)
        census.append(QuotientRecord(quotient, verdict))
        verdicts.append((quotient, verdict))
        if verbose:
            mark = "✓" if verdict.is_no else "✗"
            print(f"  {mark} quotient with {len(quotient)} vertices: {verdict.outcome.value}")

    realised = [q for q, v in verdicts if v.is_yes]
    if realised:
        conditions[4] = False
        witness = realised[0]
        return MaximalityReport(core, conditions, census, MaximalityOutcome.NOT_MAXIMAL, witness,
                                "a proper quotient other than C(F) is a core automaton")
    if any(v.is_unknown for _, v in verdicts):
        return MaximalityReport(core, conditions, census, MaximalityOutcome.UNKNOWN,
                                reason="some quotients are undecided within budget")
    conditions[4] = True
    return MaximalityReport(core, conditions, census, MaximalityOutcome.MAXIMAL_INFINITE_INDEX)

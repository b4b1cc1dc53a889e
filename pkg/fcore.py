#!/usr/bin/env python3
"""
Thompson's group F core toolkit

Builds cores of finitely generated subgroups of F and runs the decision
procedures on them. Every decision command ends with a machine-readable line
`VERDICT: yes|no|unknown` and exits 0 (yes), 1 (no), 2 (unknown) or 3 (error).

Usage:
    python fcore.py parse "X0 x1 x0"                     # Reduced diagram of a word
    python fcore.py core x0 x1 --dot core.dot            # Core of <x0, x1>
    python fcore.py core --file gens.txt --out core.txt  # Core from a generator file
    python fcore.py accepts "x0 x1" --automaton a.txt    # Does an automaton accept it?
    python fcore.py accepts x0 --file gens.txt           # Is it in the closure of <gens>?
    python fcore.py is-generating x0 x1                  # Does the set generate F?
    python fcore.py contains-derived x0 x1               # Does Cl(H) contain [F,F]?
    python fcore.py is-core-automaton notcore.txt        # Is it the core of a subgroup?
    python fcore.py is-maximal --file maximal.txt        # Maximal of infinite index?
    python fcore.py quotients core.txt                   # Surjective images of an automaton
    python fcore.py jones --p 3                          # Check the Jones core for p = 3
"""

import argparse
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from config import (
    validate_config,
    DEFAULT_BUDGET,
    QUOTIENT_CAP,
    VERBOSE,
)
from thompson.errors import ThompsonError
from thompson.element import abelianize, diagram_of, reduce
from thompson.automaton import (
    accepts,
    canonical_relabel,
    enumerate_quotients,
    is_isomorphic,
    thompson_core,
    vertex_types,
)
from thompson.core import build_core, closure_contains_derived, finitely_many_dyadic_orbits
from thompson.rewriting import is_core_automaton
from thompson.decide import (
    MaximalityOutcome,
    abelian_subgroup,
    contains_derived_subgroup,
    is_closed_abelian,
    is_generating,
    maximality_verdict,
)
from thompson.jones import verify_jones_core
from thompson.formats import (
    automaton_to_dot,
    format_automaton,
    format_pairs,
    load_automaton,
    load_generators,
)

EXIT_CODES = {"yes": 0, "no": 1, "unknown": 2}
EXIT_ERROR = 3


def finish(outcome: str):
    """Print the verdict line and exit with the matching code."""
    print(f"VERDICT: {outcome}")
    sys.exit(EXIT_CODES[outcome])


class VerdictArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the error code, never a verdict code."""

    def error(self, message):
        print(f"Error: {message}")
        sys.exit(EXIT_ERROR)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def collect_generators(args) -> list:
    gens = [diagram_of(word) for word in getattr(args, "words", None) or []]
    if getattr(args, "file", None):
        gens.extend(load_generators(args.file))
    return [reduce(g) for g in gens]


def write_dot(automaton, path: str | None, verbose: bool):
    if not path:
        return
    Path(path).write_text(automaton_to_dot(automaton))
    if verbose:
        print(f"✓ DOT written to {path}")


# ===========================================
# Commands
# ===========================================

def cmd_parse(args):
    d = diagram_of(args.word)
    if d.is_identity():
        print("identity element")
    else:
        print(format_pairs(d))
    x, y = abelianize(d)
    print(f"abelian image: ({x}, {y})")


def cmd_core(args):
    gens = collect_generators(args)
    core = build_core(gens, verbose=args.verbose)
    text = format_automaton(core)
    if args.out:
        Path(args.out).write_text(text)
        print(f"✓ core with {len(core)} vertices written to {args.out}")
    else:
        print(text, end="")
    write_dot(core, args.dot, args.verbose)


def cmd_accepts(args):
    f = diagram_of(args.word)
    if args.automaton:
        automaton = load_automaton(args.automaton)
    else:
        automaton = build_core(collect_generators(args), verbose=args.verbose)
    write_dot(automaton, args.dot, args.verbose)
    result = accepts(automaton, f)
    print(f"{'accepted' if result else 'rejected'}: {args.word}")
    finish(yes_no(result))


def cmd_is_generating(args):
    gens = collect_generators(args)
    image = abelian_subgroup(gens)
    core = build_core(gens, verbose=args.verbose)
    write_dot(core, args.dot, args.verbose)
    print(f"abelian image: {image} ({'full' if image.is_full() else 'not full'})")
    print(f"core: {len(core)} vertices, Cl(H) {'contains' if closure_contains_derived(core) else 'misses'} [F,F]")
    finish(yes_no(is_generating(gens)))


def cmd_contains_derived(args):
    gens = collect_generators(args)
    core = build_core(gens, verbose=args.verbose)
    write_dot(core, args.dot, args.verbose)
    inside = closure_contains_derived(core)
    print(f"[F,F] ⊆ Cl(H): {yes_no(inside)}")
    print(f"finitely many orbits on dyadic fractions: {yes_no(finitely_many_dyadic_orbits(core))}")
    closed, pq = is_closed_abelian(abelian_subgroup(gens))
    if closed:
        print(f"abelian image closed: {pq[0]}Z x {pq[1]}Z")
    verdict = contains_derived_subgroup(gens)
    print(f"[F,F] ⊆ H: {verdict.outcome.value} ({verdict.reason})")
    finish(yes_no(inside))


def cmd_is_core_automaton(args):
    automaton = load_automaton(args.automaton)
    write_dot(automaton, args.dot, args.verbose)
    verdict = is_core_automaton(automaton, args.budget, verbose=args.verbose)
    if verdict.is_no:
        print(f"witness: {verdict.witness}")
        print(f"failed check: {verdict.reason}")
    elif verdict.is_unknown:
        print(f"undecided pair: {verdict.witness} ({verdict.reason})")
    finish(verdict.outcome.value)


def cmd_is_maximal(args):
    gens = collect_generators(args)
    report = maximality_verdict(gens, args.budget, args.cap, verbose=args.verbose)
    write_dot(report.core, args.dot, args.verbose)
    for line in report.lines():
        print(line)
    outcome = {
        MaximalityOutcome.MAXIMAL_INFINITE_INDEX: "yes",
        MaximalityOutcome.NOT_MAXIMAL: "no",
        MaximalityOutcome.UNKNOWN: "unknown",
    }[report.outcome]
    finish(outcome)


def cmd_quotients(args):
    if args.automaton:
        automaton = load_automaton(args.automaton)
    else:
        automaton = build_core(collect_generators(args), verbose=args.verbose)
    quotients = enumerate_quotients(automaton, args.cap, verbose=args.verbose)
    f_core = thompson_core()
    print(f"{len(quotients)} quotients of a {len(automaton)}-vertex automaton")
    for i, quotient in enumerate(quotients):
        types = vertex_types(quotient)
        middles = sum(1 for kinds in types.values() if any(k.value == "middle" for k in kinds))
        tags = []
        if is_isomorphic(quotient, automaton):
            tags.append("itself")
        if is_isomorphic(quotient, f_core):
            tags.append("C(F)")
        if args.check:
            tags.append("core automaton: " + is_core_automaton(quotient, args.budget).outcome.value)
        print(f"\n# quotient {i}: {len(quotient)} vertices, {middles} middle {' '.join(tags)}")
        print(format_automaton(canonical_relabel(quotient)), end="")
    finish("yes")


def cmd_jones(args):
    report = verify_jones_core(args.p, verbose=args.verbose)
    for line in report.lines():
        print(line)
    write_dot(report.core, args.dot, args.verbose)
    finish(yes_no(report.ok))


# ===========================================
# Entry point
# ===========================================

def main():
    """Main entry point"""
    parser = VerdictArgumentParser(
        description="Cores and decision procedures for subgroups of Thompson's group F",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Inputs:
  Generators are words in x0 x1 x2 ... with uppercase for inverses, one
  generator per argument ("x1 x1 X3 X2 X1"), or a --file of generator lines
  and "u -> v" branch-pair blocks. Automata use the "root"/"edge" text format.

Exit codes:
  0 yes   1 no   2 unknown   3 error

Examples:
  # Core of F from the standard generators, with a DOT drawing
  python fcore.py core x0 x1 --dot core.dot

  # Generation problem
  python fcore.py is-generating x0 x1
  python fcore.py is-generating x0 "x1 x1 X3 X2 X1" "x1 x2 x2 X3 X1 X1"

  # Maximal subgroup of infinite index
  python fcore.py is-maximal x0 "x1 x1 X3 X2 X1" "x1 x2 x2 X3 X1 X1" --verbose

  # Core-automaton test on a hand-written automaton
  python fcore.py is-core-automaton notcore.txt

  # Jones subgroup core census
  python fcore.py jones --p 5
        """
    )

    common = VerdictArgumentParser(add_help=False)
    common.add_argument(
        "--verbose", "-v",
        action="store_true",
        default=VERBOSE,
        help="Print progress (default from FCORE_VERBOSE)"
    )
    common.add_argument(
        "--dot",
        metavar="PATH",
        help="Also write a DOT drawing of the automaton involved"
    )

    limits = VerdictArgumentParser(add_help=False)
    limits_group = limits.add_argument_group("Search limits")
    limits_group.add_argument(
        "--budget",
        type=positive_int,
        default=DEFAULT_BUDGET,
        help=f"Node expansions per word pair (default: {DEFAULT_BUDGET}, set via FCORE_BUDGET)"
    )
    limits_group.add_argument(
        "--cap",
        type=positive_int,
        default=QUOTIENT_CAP,
        help=f"Maximum distinct quotients (default: {QUOTIENT_CAP}, set via FCORE_QUOTIENT_CAP)"
    )

    generators = VerdictArgumentParser(add_help=False)
    generators.add_argument(
        "words",
        nargs="*",
        help="Generator words, one per argument"
    )
    generators.add_argument(
        "--file", "-f",
        metavar="FILE",
        help="File of generator words and branch-pair blocks"
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="Print the reduced tree-diagram of a word")
    p.add_argument("word", help='Generator word, e.g. "X0 x1 x0"')
    p.set_defaults(handler=cmd_parse)

    p = sub.add_parser("core", parents=[common, generators], help="Build the core of a subgroup")
    p.add_argument("--out", "-o", metavar="PATH", help="Write the automaton here instead of stdout")
    p.set_defaults(handler=cmd_core)

    p = sub.add_parser("accepts", parents=[common], help="Does an automaton (or a core) accept an element?")
    p.add_argument("word", help="Element as a generator word")
    p.add_argument("--automaton", "-a", metavar="FILE", help="Automaton file")
    p.add_argument("--file", "-f", metavar="FILE", help="Generators whose core is used instead")
    p.set_defaults(handler=cmd_accepts)

    p = sub.add_parser("is-generating", parents=[common, generators], help="Do the generators generate F?")
    p.set_defaults(handler=cmd_is_generating)

    p = sub.add_parser("contains-derived", parents=[common, generators], help="Does Cl(H) contain [F,F]?")
    p.set_defaults(handler=cmd_contains_derived)

    p = sub.add_parser("is-core-automaton", parents=[common, limits], help="Is an automaton the core of a subgroup?")
    p.add_argument("automaton", help="Automaton file")
    p.set_defaults(handler=cmd_is_core_automaton)

    p = sub.add_parser("is-maximal", parents=[common, generators, limits],
                       help="Is the (closed) subgroup maximal of infinite index?")
    p.set_defaults(handler=cmd_is_maximal)

    p = sub.add_parser("quotients", parents=[common, limits], help="List the surjective images of an automaton")
    p.add_argument("automaton", nargs="?", help="Automaton file")
    p.add_argument("--file", "-f", metavar="FILE", help="Generators whose core is used instead")
    p.add_argument("--check", action="store_true", help="Run the core-automaton test on every quotient")
    p.set_defaults(handler=cmd_quotients)

    p = sub.add_parser("jones", parents=[common], help="Verify the structure of the Jones subgroup core")
    p.add_argument("--p", type=int, required=True, help="Prime parameter")
    p.set_defaults(handler=cmd_jones)

    args = parser.parse_args()

    # Validate configuration
    try:
        validate_config()
    except ValueError as e:
        print(f"Configuration Error: {e}")
        sys.exit(EXIT_ERROR)

    if args.command == "accepts" and not (args.automaton or args.file):
        print("Error: accepts needs --automaton FILE or --file GENERATORS")
        sys.exit(EXIT_ERROR)
    if args.command == "quotients" and not (args.automaton or args.file):
        print("Error: quotients needs an automaton file or --file GENERATORS")
        sys.exit(EXIT_ERROR)

    try:
        args.handler(args)
    except (ThompsonError, OSError) as e:
        print(f"Error: {e}")
        sys.exit(EXIT_ERROR)


if __name__ == "__main__":
    main()

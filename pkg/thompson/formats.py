"""
Formats - text formats for generators and automata, and DOT export

Generator files hold one generator per block. A block is either a single line
of generator tokens (`x0 X1 x2`) or consecutive `u -> v` branch-pair lines
(empty word spelled `e`). Blank lines separate blocks; `#` starts a comment.

Automaton files are `root <id>` followed by `edge <src> <0|1> <dst>` lines.
"""

import re
import sys
import os
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import DOT_COLORS_RAW, parse_dot_colors

from .automaton import TreeAutomaton, VertexType, vertex_types
from .element import TreeDiagram, parse_word, word_to_diagram
from .errors import AutomatonError, FormatError, WordSyntaxError
from .words import format_binary_word, parse_binary_word

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_PAIR = re.compile(r"^\s*(\S+)\s*->\s*(\S+)\s*$")


# ===========================================
# Generators
# ===========================================

def format_pairs(d: TreeDiagram) -> str:
    return "\n".join(f"{format_binary_word(u)} -> {format_binary_word(v)}" for u, v in d.pairs)


def parse_generators(text: str) -> list[TreeDiagram]:
    gens: list[TreeDiagram] = []
    pairs: list[tuple[str, str]] = []
    pairs_start = 0

    def flush():
        if pairs:
            try:
                gens.append(TreeDiagram.from_pairs(pairs))
            except WordSyntaxError as e:
                raise FormatError(str(e), line=pairs_start) from e
            pairs.clear()

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush()
            continue
        m = _PAIR.match(line)
        if m:
            if not pairs:
                pairs_start = number
            try:
                pairs.append((parse_binary_word(m.group(1)), parse_binary_word(m.group(2))))
            except WordSyntaxError as e:
                raise FormatError(str(e), line=number) from e
            continue
        flush()
        try:
            gens.append(word_to_diagram(parse_word(line)))
        except WordSyntaxError as e:
            raise FormatError(str(e), line=number) from e
    flush()
    return gens


def load_generators(path: str | Path) -> list[TreeDiagram]:
    return parse_generators(Path(path).read_text())


# ===========================================
# Automata
# ===========================================

def format_automaton(a: TreeAutomaton) -> str:
    """Root line, then edges sorted by source id and digit."""
    lines = [f"root {a.root}"]
    for (src, digit), dst in sorted(a.edges.items()):
        lines.append(f"edge {src} {digit} {dst}")
    return "\n".join(lines) + "\n"


def parse_automaton(text: str) -> TreeAutomaton:
    root = None
    edges: dict[tuple[str, int], str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "root" and len(fields) == 2:
            if root is not None:
                raise FormatError("second root line", line=number)
            root = fields[1]
            ids = [root]
        elif fields[0] == "edge" and len(fields) == 4:
            src, digit, dst = fields[1], fields[2], fields[3]
            if digit not in ("0", "1"):
                raise FormatError(f"edge label must be 0 or 1 (got '{digit}')", line=number)
            if (src, int(digit)) in edges:
                raise FormatError(f"duplicate {digit}-edge from '{src}'", line=number)
            edges[(src, int(digit))] = dst
            ids = [src, dst]
        else:
            raise FormatError(f"cannot parse '{line}'", line=number)
        for ident in ids:
            if not _IDENT.match(ident):
                raise FormatError(f"'{ident}' is not an identifier", line=number)
    if root is None:
        raise FormatError("missing root line")
    try:
        return TreeAutomaton(root, edges)
    except AutomatonError as e:
        raise FormatError(str(e)) from e


def load_automaton(path: str | Path) -> TreeAutomaton:
    return parse_automaton(Path(path).read_text())


def save_automaton(a: TreeAutomaton, path: str | Path):
    Path(path).write_text(format_automaton(a))


def automaton_to_dot(a: TreeAutomaton, name: str = "automaton") -> str:
    """DOT text; vertices are filled by type and labeled with id and type."""
    colors = parse_dot_colors(DOT_COLORS_RAW)
    types = vertex_types(a)
    lines = [f"digraph {name} {{", '  node [shape=circle, style=filled];']
    for v in sorted(a.vertices):
        kinds = sorted(types[v], key=lambda k: list(VertexType).index(k))
        label = "/".join(k.value for k in kinds) or "unreached"
        color = colors.get(kinds[0].value, "white") if len(kinds) == 1 else "tomato"
        shape = "doublecircle" if v == a.root else "circle"
        lines.append(f'  "{v}" [label="{v}\\n{label}", fillcolor="{color}", shape={shape}];')
    for (src, digit), dst in sorted(a.edges.items()):
        lines.append(f'  "{src}" -> "{dst}" [label="{digit}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

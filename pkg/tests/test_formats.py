import pytest

from conftest import NOT_CORE_TEXT
from thompson.automaton import is_isomorphic, thompson_core
from thompson.core import build_core
from thompson.element import diagram_of, make_x
from thompson.errors import FormatError
from thompson.formats import (
    automaton_to_dot,
    format_automaton,
    format_pairs,
    load_automaton,
    load_generators,
    parse_automaton,
    parse_generators,
    save_automaton,
)
from thompson.jones import a_sum

GENERATOR_FILE = """# the maximal example, with x0 spelled out as branch pairs
00 -> 0
01 -> 10
1 -> 11

x1 x1 X3 X2 X1
x1 x2 x2 X3 X1 X1   # third generator
"""


def test_format_pairs():
    assert format_pairs(make_x(0)) == "00 -> 0\n01 -> 10\n1 -> 11"


def test_parse_generators():
    gens = parse_generators(GENERATOR_FILE)
    assert gens == [
        make_x(0),
        diagram_of("x1 x1 X3 X2 X1"),
        diagram_of("x1 x2 x2 X3 X1 X1"),
    ]
    assert parse_generators("e -> e\n") == [diagram_of("")]


def test_generator_errors_carry_line_numbers():
    with pytest.raises(FormatError) as info:
        parse_generators("x0\nx1 y2\n")
    assert info.value.line == 2
    with pytest.raises(FormatError) as info:
        parse_generators("\n0 -> 0\n1 -> 10\n")
    assert info.value.line == 2


def test_automaton_text_round_trip(tmp_path, not_core):
    assert format_automaton(not_core) == NOT_CORE_TEXT
    path = tmp_path / "notcore.txt"
    path.write_text(NOT_CORE_TEXT)
    loaded = load_automaton(path)
    save_automaton(loaded, tmp_path / "again.txt")
    assert (tmp_path / "again.txt").read_text() == NOT_CORE_TEXT

    core = build_core([make_x(0), make_x(1)])
    again = parse_automaton(format_automaton(core))
    assert format_automaton(again) == format_automaton(core)
    assert is_isomorphic(again, thompson_core())


@pytest.mark.parametrize("text", [
    "edge r 0 a\nedge r 1 b\n",
    "root r\nroot s\n",
    "root r\nedge r 2 a\nedge r 1 b\n",
    "root r\nedge r 0 a\nedge r 0 b\nedge r 1 b\n",
    "root r\nedge r 0 a-b\nedge r 1 b\n",
    "root r\nedge r 0 a\n",
    "root r\nconnect r a\n",
])
def test_bad_automaton_files(text):
    with pytest.raises(FormatError):
        parse_automaton(text)


def test_load_generators(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("x0\nx1\n")
    assert load_generators(path) == [make_x(0), make_x(1)]


def test_dot_export():
    dot = automaton_to_dot(thompson_core())
    assert dot.startswith("digraph automaton {")
    assert '"M" [label="M\\nmiddle", fillcolor="palegreen", shape=circle];' in dot
    assert '"r" [label="r\\nroot", fillcolor="gold", shape=doublecircle];' in dot
    assert '"L" -> "M" [label="1"];' in dot
    clashing = automaton_to_dot(a_sum(2))
    assert 'label="a0\\nroot/left/right/middle", fillcolor="tomato"' in clashing

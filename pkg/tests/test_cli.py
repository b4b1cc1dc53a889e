import sys

import pytest

import config
import fcore
from conftest import MAXIMAL_WORDS, NOT_CORE_TEXT, random_word


def run(monkeypatch, capsys, *argv):
    """Run the CLI; returns (exit code, stdout lines). Commands without a verdict exit 0."""
    monkeypatch.setattr(sys, "argv", ["fcore.py", *argv])
    try:
        fcore.main()
        code = 0
    except SystemExit as e:
        code = e.code
    return code, capsys.readouterr().out.splitlines()


def test_parse(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, "parse", "x0")
    assert code == 0
    assert out == ["00 -> 0", "01 -> 10", "1 -> 11", "abelian image: (1, -1)"]

    _, out = run(monkeypatch, capsys, "parse", "x0 X0")
    assert out[0] == "identity element"


def test_parse_error_exits_with_error_code(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, "parse", "x0 q1")
    assert code == fcore.EXIT_ERROR
    assert out[-1].startswith("Error: bad generator token 'q1'")


def test_core_writes_automaton_and_dot(monkeypatch, capsys, tmp_path):
    out_path, dot_path = tmp_path / "core.txt", tmp_path / "core.dot"
    code, out = run(monkeypatch, capsys, "core", "x0", "x1", "--out", str(out_path), "--dot", str(dot_path))
    assert code == 0
    assert "4 vertices" in out[0]
    assert out_path.read_text().startswith("root v0\n")
    assert dot_path.read_text().startswith("digraph")

    _, out = run(monkeypatch, capsys, "core")
    assert out == ["root v0"]


def test_is_generating(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, "is-generating", "x0", "x1")
    assert code == 0 and out[-1] == "VERDICT: yes"
    code, out = run(monkeypatch, capsys, "is-generating", *MAXIMAL_WORDS)
    assert code == 1 and out[-1] == "VERDICT: no"


def test_is_core_automaton(monkeypatch, capsys, tmp_path):
    path = tmp_path / "notcore.txt"
    path.write_text(NOT_CORE_TEXT)
    code, out = run(monkeypatch, capsys, "is-core-automaton", str(path))
    assert code == 1
    assert "witness: ('01', '010')" in out
    assert out[-1] == "VERDICT: no"


def test_accepts(monkeypatch, capsys, tmp_path):
    gens = tmp_path / "gens.txt"
    gens.write_text("x0 x1\nx1 x2\nx2 x3\n")
    code, out = run(monkeypatch, capsys, "accepts", "x0", "--file", str(gens))
    assert code == 1 and out[-1] == "VERDICT: no"
    code, out = run(monkeypatch, capsys, "accepts", "x1 x2 x2 x3", "--file", str(gens))
    assert code == 0 and out[-1] == "VERDICT: yes"
    code, out = run(monkeypatch, capsys, "accepts", "x0")
    assert code == fcore.EXIT_ERROR


def test_is_maximal(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, "is-maximal", *MAXIMAL_WORDS)
    assert code == 0
    assert "verdict: maximal, infinite index" in out
    assert out[-1] == "VERDICT: yes"


def test_contains_derived(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, "contains-derived", "x0", "x1")
    assert code == 0 and out[-1] == "VERDICT: yes"
    code, out = run(monkeypatch, capsys, "contains-derived", "x0")
    assert code == 1


def test_jones(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, "jones", "--p", "3")
    assert code == 0
    assert "  vertices: 14 (expected 14)" in out
    code, out = run(monkeypatch, capsys, "jones", "--p", "4")
    assert code == fcore.EXIT_ERROR


def test_quotients(monkeypatch, capsys, tmp_path):
    path = tmp_path / "core.txt"
    path.write_text("root r\nedge r 0 L\nedge r 1 R\nedge L 0 L\nedge L 1 M\n"
                    "edge R 0 M\nedge R 1 R\nedge M 0 M\nedge M 1 M\n")
    code, out = run(monkeypatch, capsys, "quotients", str(path), "--cap", "1")
    assert code == fcore.EXIT_ERROR
    assert out[-1].startswith("Error: more than 1 distinct quotients")
    code, out = run(monkeypatch, capsys, "quotients", str(path))
    assert code == 0
    assert any("itself" in line and "C(F)" in line for line in out)


def test_invalid_configuration(monkeypatch, capsys):
    def broken():
        raise ValueError("bad")

    monkeypatch.setattr(fcore, "validate_config", broken)
    code, out = run(monkeypatch, capsys, "parse", "x0")
    assert code == fcore.EXIT_ERROR
    assert out == ["Configuration Error: bad"]


def test_validate_config(monkeypatch):
    assert config.validate_config()
    monkeypatch.setattr(config, "DEFAULT_BUDGET", 0)
    monkeypatch.setattr(config, "DOT_COLORS_RAW", "root=gold,corner=red")
    with pytest.raises(ValueError) as info:
        config.validate_config()
    assert "FCORE_BUDGET" in str(info.value)
    assert "corner" in str(info.value)


def test_parse_dot_colors():
    assert config.parse_dot_colors("root=gold, middle = green,") == {"root": "gold", "middle": "green"}
    with pytest.raises(ValueError):
        config.parse_dot_colors("root")


def test_usage_errors_exit_with_error_code(monkeypatch, capsys, tmp_path):
    path = tmp_path / "notcore.txt"
    path.write_text(NOT_CORE_TEXT)
    code, out = run(monkeypatch, capsys, "is-core-automaton", str(path), "--budget", "many")
    assert code == fcore.EXIT_ERROR
    assert out[-1].startswith("Error: argument --budget")

    code, out = run(monkeypatch, capsys, "frobnicate")
    assert code == fcore.EXIT_ERROR
    assert out[-1].startswith("Error: ")


@pytest.mark.parametrize("flag, value", [("--budget", "0"), ("--budget", "-5"), ("--cap", "0")])
def test_limits_must_be_positive(monkeypatch, capsys, flag, value):
    code, out = run(monkeypatch, capsys, "is-maximal", "x0", "x1", flag, value)
    assert code == fcore.EXIT_ERROR
    assert "expected a positive integer" in out[-1]
    assert not any(line.startswith("VERDICT:") for line in out)


def test_exit_code_matches_verdict_line(monkeypatch, capsys, rng):
    commands = ["is-generating", "contains-derived", "is-maximal"]
    for _ in range(40):
        words = [random_word(rng, 5) or "x0" for _ in range(rng.randint(1, 3))]
        command = rng.choice(commands)
        extra = ["--cap", "200", "--budget", "500"] if command == "is-maximal" else []
        code, out = run(monkeypatch, capsys, command, *words, *extra)
        verdicts = [line for line in out if line.startswith("VERDICT: ")]
        if code == fcore.EXIT_ERROR:
            assert not verdicts and out[-1].startswith("Error: ")
        else:
            assert verdicts == [out[-1]]
            assert fcore.EXIT_CODES[out[-1].removeprefix("VERDICT: ")] == code

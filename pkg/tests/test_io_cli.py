import json
import random

import pytest

from dlbackdoor import cnf
from dlbackdoor.cli import main
from dlbackdoor.gen import random_theory
from dlbackdoor.ioformat import TheoryParseError, parse_theory, render_theory
from helpers import F, X, Y, Z, reduct_example_theory, theory_x_d2


D2_TEXT = """\
# two mutually blocking rules over x=1, z=2, y=3
p dt 3 2
w 1 0
r 1 0 : 2 0 : -3 0
r 1 0 : 3 0 : -2 0
"""


def test_parse_knowledge_and_rules():
    theory = parse_theory(D2_TEXT)
    assert theory.knowledge == (F([1]),)
    assert theory.rules[0].prerequisite == F([1])
    assert theory.rules[0].justification == F([2])
    assert theory.rules[0].conclusion == F([-3])
    assert theory.rules[1].conclusion == F([-2])


def test_parse_empty_sections_and_empty_clause():
    theory = parse_theory("r : : 0\n")
    rule = theory.rules[0]
    assert rule.prerequisite == cnf.TOP
    assert rule.justification == cnf.TOP
    assert rule.conclusion == cnf.BOTTOM


def test_parse_multi_clause_formula():
    theory = parse_theory("w 1 2 0 -3 0\n")
    assert theory.knowledge == (F([1, 2], [-3]),)


def test_parse_errors():
    with pytest.raises(TheoryParseError, match="line 1"):
        parse_theory("w 1 2\n")  # unterminated clause
    with pytest.raises(TheoryParseError, match="3 sections"):
        parse_theory("r 1 0 : 2 0\n")
    with pytest.raises(TheoryParseError, match="unknown directive"):
        parse_theory("q 1 0\n")
    with pytest.raises(TheoryParseError, match="integer"):
        parse_theory("w one 0\n")
    with pytest.raises(TheoryParseError, match="declares 1 rules"):
        parse_theory("p dt 1 1\nw 1 0\n")
    with pytest.raises(TheoryParseError, match="variable 2 is used"):
        parse_theory("p dt 1 0\nw 2 0\n")
    with pytest.raises(TheoryParseError, match="header"):
        parse_theory("p cnf 1 0\n")


def test_render_round_trip():
    rng = random.Random(89)
    for _ in range(60):
        theory = random_theory(rng)
        rendered = render_theory(theory)
        reparsed = parse_theory(rendered)
        assert reparsed == theory
        assert render_theory(reparsed) == rendered


def test_render_is_normalized():
    assert render_theory(parse_theory("w 2 -1 0\n")) == "p dt 2 0\nw -1 2 0\n"


def write_theory(tmp_path, theory, name="t.dt"):
    path = tmp_path / name
    path.write_text(render_theory(theory))
    return str(path)


def test_cli_detect_found_and_missing(tmp_path, capsys):
    path = write_theory(tmp_path, theory_x_d2())
    assert main(["detect", path, "--class", "monotone", "-k", "2"]) == 0
    assert "backdoor: 2 3" in capsys.readouterr().out

    assert main(["detect", path, "--class", "monotone", "-k", "1"]) == 1
    out = capsys.readouterr().out
    assert "no monotone backdoor" in out
    assert "minimum monotone backdoor size: 2" in out


def test_cli_detect_json(tmp_path, capsys):
    path = write_theory(tmp_path, theory_x_d2())
    assert main(["detect", path, "--class", "horn", "-k", "0", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"backdoor": [], "class": "horn", "k": 0}


def test_cli_eval(tmp_path, capsys):
    path = write_theory(tmp_path, reduct_example_theory())
    assert main(["eval", path, "--class", "id", "--backdoor", "2"]) == 10
    out = capsys.readouterr().out
    assert "extension-exists" in out
    assert "witness generating: 0" in out

    assert main(["eval", path, "--class", "id", "--backdoor", ""]) == 2
    assert "not a strong" in capsys.readouterr().err


def test_cli_eval_no_extension_json(tmp_path, capsys):
    from helpers import theory_x_d1

    path = write_theory(tmp_path, theory_x_d1())
    code = main(["eval", path, "--class", "id", "--backdoor", "1,2", "--json"])
    assert code == 20
    payload = json.loads(capsys.readouterr().out)
    assert payload["answer"] == "no-extension"
    assert payload["witness"] is None
    assert payload["stats"]["reducts"] == 9


def test_cli_check(tmp_path, capsys):
    path = write_theory(tmp_path, theory_x_d2())
    assert main(["check", path, "--generating", "0"]) == 0
    assert "stable-extension: yes" in capsys.readouterr().out
    assert main(["check", path, "--generating", "0,1"]) == 0
    assert "stable-extension: no" in capsys.readouterr().out
    assert main(["check", path, "--generating", "7"]) == 2


def test_cli_enumerate(tmp_path, capsys):
    from helpers import theory_x_d1

    path = write_theory(tmp_path, theory_x_d2())
    assert main(["enumerate", path]) == 10
    out = capsys.readouterr().out
    assert "2 extensions" in out

    path = write_theory(tmp_path, theory_x_d1())
    assert main(["enumerate", path]) == 20
    assert "0 extensions" in capsys.readouterr().out


def test_cli_solve(tmp_path, capsys):
    path = write_theory(tmp_path, reduct_example_theory())
    assert main(["solve", path, "--class", "id", "-k", "2", "--json"]) == 10
    payload = json.loads(capsys.readouterr().out)
    assert payload["answer"] == "extension-exists"
    assert payload["backdoor"] == [2]

    assert main(["solve", path, "--class", "id", "-k", "0"]) == 10  # brute fallback
    payload_out = capsys.readouterr().out
    assert "extension-exists" in payload_out


def test_cli_solve_over_budget(tmp_path, capsys):
    lines = [f"r : : -{i} 0" for i in range(1, 23)]
    path = tmp_path / "big.dt"
    path.write_text("\n".join(lines) + "\n")
    assert main(["solve", str(path), "--class", "monotone", "-k", "0"]) == 1
    assert "over budget" in capsys.readouterr().err


def test_cli_stdin_and_parse_error(tmp_path, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("w 1 0\n"))
    assert main(["enumerate", "-"]) == 10
    capsys.readouterr()

    bad = tmp_path / "bad.dt"
    bad.write_text("w 1\n")
    assert main(["enumerate", str(bad)]) == 2
    assert "error: line 1" in capsys.readouterr().err

    assert main(["enumerate", str(tmp_path / "missing.dt")]) == 2


def test_cli_gen_is_deterministic(capsys):
    assert main(["gen", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first
    parse_theory(first)  # output is valid input

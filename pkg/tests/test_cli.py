import io
import json

import pytest

from ramification.cli import int_list, main
from ramification.scenario import ScenarioError, load_scenarios, parse_base_spec, parse_residue


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def tokens(line):
    return set(line.split())


def line_for(text, prefix):
    return next(l for l in text.splitlines() if l.startswith(prefix))


def test_sqrt_x_sqrt_y_report(fixtures_dir):
    code, text = run("run", str(fixtures_dir / "example_3_2.json"))
    assert code == 0
    line = line_for(text, "[abhyankar L1 L2]")
    assert {"e1=2", "e2=2", "divisible=true", "direct=ramified"} <= tokens(line)
    assert 'value_group="1/2 [1 0; 0 1]"' in line_for(text, "[ramify L]")


def test_f3_report(fixtures_dir):
    code, text = run("run", str(fixtures_dir / "example_f3_tame.json"))
    assert code == 0
    line = line_for(text, "[abhyankar L1 L2]")
    assert {"e2p=4", "d_max=2", "lhs=8", "rhs=8", "condition=true", "direct=unramified"} <= tokens(line)
    assert "residue=GF(3)(2^(1/2))" in line_for(text, "[ramify L]")


def test_every_fixture_runs_cleanly_and_deterministically(fixtures_dir):
    for path in sorted(fixtures_dir.glob("*.json")):
        first = run("--self-check", "run", str(path))
        second = run("--self-check", "run", str(path))
        assert first[0] == 0, path
        assert first == second


def test_structured_mirrors_keys(fixtures_dir):
    code, text = run("--format", "structured", "run", str(fixtures_dir / "example_f3_tame.json"))
    doc = json.loads(text)
    assert code == 0 and doc["warnings"] == 0
    ab = next(r for r in doc["results"] if r["check"] == "abhyankar L1 L2")
    assert [k for k in ab if k != "check"][:12] == [
        "e1", "e2", "e2p", "deg_lp_l1", "d_max", "lhs", "rhs", "condition", "direct", "divisible", "lcm_e", "witness",
    ]
    rel = next(r for r in doc["results"] if r["check"] == "relative L L1")
    assert list(rel)[1:8] == ["e", "f", "degree", "defect", "class", "value_group", "residue_ambiguous"]


def test_empty_checks(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"base": {"residue": "GF(3)", "variables": ["t"]}, "towers": {}, "checks": []}))
    assert run("run", str(p)) == (0, "")


def test_undetermined_is_a_warning(tmp_path):
    p = tmp_path / "amb.json"
    p.write_text(json.dumps({
        "base": {"residue": "GF(3)", "variables": ["t"]},
        "towers": {"A": ["root(4, 1)"]},
        "checks": ["ramify A"],
    }))
    code, text = run("run", str(p))
    assert code == 0
    assert "class=undetermined" in text and "warnings: 1" in text


def test_failing_check_exits_nonzero(tmp_path):
    p = tmp_path / "wild.json"
    p.write_text(json.dumps({
        "base": {"residue": "GF(3)", "variables": ["t"]},
        "towers": {"A": ["root(3, t)"], "B": ["sqrt(t)"]},
        "checks": ["abhyankar A B"],
    }))
    code, text = run("run", str(p))
    assert code == 1 and "TameRequired" in text


def test_parse_errors_report_lines():
    text = '{\n  "base": {"residue": "GF(3)", "variables": ["t"]},\n  "towers": {\n    "A": ["sqrt(t"]\n  }\n}'
    with pytest.raises(ScenarioError, match="line 4"):
        load_scenarios(text)
    with pytest.raises(ScenarioError, match="line 2"):
        load_scenarios('{\n  "base": ,\n}')
    with pytest.raises(ScenarioError, match="undefined tower"):
        load_scenarios(json.dumps({"base": {"residue": "Q", "variables": ["X"]}, "towers": {}, "checks": ["ramify L"]}))


def test_bad_file_exit_code(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{ not json")
    assert run("run", str(p))[0] == 1
    assert run("run", str(tmp_path / "missing.json"))[0] == 1
    assert run("frobnicate")[0] == 1


def test_value_command():
    assert run("value", "Q[X,Y]", "X^2*Y+X^3") == (0, "value=(2, 1)\n")
    assert run("value", "GF(3)[t]", "g1^2/t", "--gen", "root(4, 2*t)") == (0, "value=(-1/2)\n")
    code, text = run("--format", "structured", "value", "Q[X,Y]", "X+Y")
    assert json.loads(text) == {"value": "(0, 1)"}
    assert run("value", "Q[X]", "X+*")[0] == 1


def test_sweep_default_and_empty():
    code, text = run("sweep")
    assert code == 0
    fields = dict(kv.split("=") for kv in text.split())
    assert int(fields["total"]) == 200
    assert int(fields["agreements"]) == int(fields["total"]) - int(fields["skipped"])
    assert fields["disagreements"] == "0"
    assert run("sweep", "--primes", "")[1].startswith("total=0 ")


def test_sweep_worked_examples():
    code, text = run("sweep", "--examples")
    assert code == 0
    lines = text.splitlines()
    assert lines[-1] == "total=4"
    assert "direct=ramified" in lines[0] and "direct=ramified" in lines[1]
    assert "direct=unramified" in lines[2] and "direct=unramified" in lines[3]


def test_sweep_guards():
    assert run("sweep", "--orders", "1-500")[0] == 1
    assert run("sweep", "--primes", "4")[0] == 1


def test_helpers():
    assert int_list("1-3,7") == (1, 2, 3, 7)
    assert int_list("-2..2") == (-2, -1, 0, 1, 2)
    assert int_list("") == ()
    assert str(parse_residue("GF(9)")) == "GF(3^2)"
    assert str(parse_residue("GF(3^2)")) == "GF(3^2)"
    assert str(parse_base_spec("Q[X, Y]")) == "Q[X,Y]"
    with pytest.raises(ValueError):
        parse_residue("GF(6)")

import re

import pytest
import yaml
from click.testing import CliRunner

from tamegal.cli import main, execute, golden_dir, EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVARIANT
from tamegal.scenario import (SUITES, ScenarioParseError, ScenarioInvariantError, corpus_dir,
                              list_scenarios, load_scenario, parse_scenario, check_invariants)
from tamegal.suites import run_scenario

BASE = {"version": 1, "name": "tiny", "group": [2], "conductor": 4, "gamma": [1, 3],
        "suites": ["stickelberger", "resolvend"], "bounds": {"samples": 4}}


def write(tmp_path, data, name="s.yaml"):
    p = tmp_path / name
    p.write_text(yaml.safe_dump(data) if isinstance(data, dict) else data)
    return p


def test_run_corpus_scenario_with_basic_diagram():
    r = CliRunner().invoke(main, ["run", "c2_over_c2", "--suite", "basic-diagram"])
    assert r.exit_code == 0
    assert "[basic-diagram]" in r.output and "suite PASS" in r.output
    assert "[stickelberger]" not in r.output


def test_empty_filter_runs_all_selected_suites(tmp_path):
    status, text = execute(str(write(tmp_path, BASE)))
    assert status == EXIT_OK
    assert "[stickelberger]" in text and "[resolvend]" in text
    assert text.endswith("summary: " + text.rsplit("summary: ", 1)[1])


def test_malformed_conductor_exit_3(tmp_path):
    bad = dict(BASE, group=[3])
    r = CliRunner().invoke(main, ["run", str(write(tmp_path, bad))])
    assert r.exit_code == EXIT_INVARIANT
    assert "invariant violation" in r.output


@pytest.mark.parametrize("text", ["version: 1\nname: x\n", "- 1\n- 2\n", "version: 7\nname: x\ngroup: [2]\nconductor: 4\n",
                                  "version: 1\nname: x\ngroup: [2]\nconductor: four\n", "a: [\n"])
def test_parse_errors_exit_2(tmp_path, text):
    p = write(tmp_path, text)
    status, out = execute(str(p))
    assert status == EXIT_PARSE and out.startswith("parse error")


def test_missing_file_is_parse_error(tmp_path):
    assert execute(str(tmp_path / "nope.yaml"))[0] == EXIT_PARSE


def test_invariants():
    with pytest.raises(ScenarioInvariantError):
        check_invariants(parse_scenario(dict(BASE, places=[{"name": "w", "q": 6}])))
    with pytest.raises(ScenarioInvariantError):
        check_invariants(parse_scenario(dict(BASE, places=[{"name": "w", "q": 3}],
                                             kummer={"radicals": [{"zeta": 0}], "betas": [[1, 0], [1, 0]]},
                                             group=[4], conductor=4)))
    with pytest.raises(ScenarioInvariantError):
        check_invariants(parse_scenario(dict(BASE, group=[4], conductor=6)))
    with pytest.raises(ScenarioParseError):
        parse_scenario(dict(BASE, suites=["nonsense"]))
    with pytest.raises(ScenarioParseError):
        parse_scenario(dict(BASE, action="sideways"))


def test_failing_suite_exit_1(tmp_path):
    # flag disagrees with the base constants: Q(i) does not hold zeta_4 over {1, 3}
    data = dict(BASE, group=[4], conductor=8, gamma=[1, 3], suites=["ideles"],
                places=[{"name": "v", "q": 5}], flags={"roots_in_base": True})
    assert execute(str(write(tmp_path, data)))[0] == EXIT_INVARIANT
    # a partner that overlaps the ramified set makes the product check fail
    data = {"version": 1, "name": "overlap", "group": [2], "conductor": 8, "gamma": [1, 5],
            "places": [{"name": "v0", "q": 5}],
            "kummer": {"radicals": [{"zeta": 0, "pi": "1/2"}], "betas": [[1, 0, 0, 0], [1, 0, 0, 0]],
                       "partners": [[{"zeta": 0, "pi": "1/2"}]]},
            "suites": ["ideles"], "bounds": {"samples": 2}}
    status, text = execute(str(write(tmp_path, data)))
    assert status == EXIT_FAIL and "FAIL product witness" in text


def test_seed_recorded_and_reproducible(tmp_path):
    p = str(write(tmp_path, BASE))
    a, b = execute(p, seed=5)[1], execute(p, seed=5)[1]
    assert a == b and "seed: 5" in a


def test_out_and_kv_format(tmp_path):
    out = tmp_path / "r.txt"
    r = CliRunner().invoke(main, ["run", str(write(tmp_path, BASE)), "--out", str(out), "--format", "kv"])
    assert r.exit_code == 0
    text = out.read_text()
    assert text == r.output
    assert "scenario=tiny" in text and "summary.fail=0" in text
    assert all("=" in line for line in text.splitlines())


def test_list_and_describe(tmp_path):
    r = CliRunner().invoke(main, ["list"])
    names = r.output.split()
    assert "c2_over_c2" in names and len(names) == len(list_scenarios())
    empty = tmp_path / "empty"
    empty.mkdir()
    assert CliRunner().invoke(main, ["list", "--corpus", str(empty)]).output == ""
    assert list_scenarios(empty) == []
    for s in SUITES:
        r = CliRunner().invoke(main, ["describe", s])
        assert r.exit_code == 0 and r.output.startswith(s + ":")
        assert not re.search(r"\b(Prop|Thm|Theorem|Lemma|Def|Eq)\.?\s*\(?\d", r.output)
    assert "ker(det)" in CliRunner().invoke(main, ["describe", "stickelberger"]).output
    r = CliRunner().invoke(main, ["describe", "nonsense"])
    assert r.exit_code != 0 and "unknown suite" in r.output


def test_corpus_parses_and_holds_invariants():
    paths = list_scenarios()
    assert len(paths) >= 15
    for p in paths:
        sc = load_scenario(p)
        assert sc.name == p.stem
        assert check_invariants(sc)


def test_golden_files_match():
    r = CliRunner().invoke(main, ["golden", "--check"])
    assert r.exit_code == 0, r.output
    assert sorted(p.stem for p in golden_dir().glob("*.txt")) == [p.stem for p in list_scenarios()]

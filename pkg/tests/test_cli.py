import io
import json
import subprocess
import sys
import time

import pytest

from jumploci import cli
from jumploci.fixtures import fixture_names, fixture_text
from jumploci.verdicts import InconsistentVerdict


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_whitehead_verdict_line():
    code, out, _ = run("verdict", "--fixture", "whitehead")
    assert code == 0
    assert out.splitlines()[0] == "not formal; 1-finite 1-model: open"


def test_tau_of_6_3_1_is_three_lines():
    code, out, _ = run("tau", "--fixture", "link-6_3_1")
    assert code == 0
    assert out.count("∪") == 2


def test_tree_construction_depth_two():
    code, out, _ = run("construct", "--fixture", "tree-g1-g1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["input"] == "tree-g1-g1" and doc["command"] == "construct"
    code, text, _ = run("construct", "--fixture", "tree-g1-g1")
    assert "R^1_2 = {x4 = 0, x5 = 0, x6 = 0} ∪ {x1 = 0, x2 = 0, x3 = 0}" in text


def test_output_is_deterministic():
    for args in (("verdict", "--fixture", "link-8_4_2", "--json"),
                 ("tcone", "--fixture", "sigma2-x-s1"), ("examples",)):
        assert run(*args) == run(*args)


def test_json_output_is_canonical():
    _, out, _ = run("resonance", "--fixture", "heisenberg", "--json")
    assert out == json.dumps(json.loads(out), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def test_examples_cover_every_fixture():
    code, out, _ = run("examples", "--json")
    assert code == 0
    assert [r["name"] for r in json.loads(out)["examples"]] == fixture_names()


def test_exit_code_parse_errors(tmp_path):
    assert run("resonance", "--fixture", "no-such")[0] == cli.EXIT_PARSE
    assert run("bogus-command")[0] == cli.EXIT_PARSE
    assert run("resonance")[0] == cli.EXIT_PARSE
    assert run("resonance", "--fixture", "whitehead", "--primes", "4,6")[0] == cli.EXIT_PARSE
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert run("resonance", "--input", str(bad))[0] == cli.EXIT_PARSE
    assert run("resonance", "--input", str(tmp_path / "absent.json"))[0] == cli.EXIT_PARSE


def test_exit_code_budget():
    code, _, err = run("tcone", "--fixture", "link-8_4_2", "--budget-support", "1")
    assert code == cli.EXIT_BUDGET and "budget" in err


def test_exit_code_invalid_data(tmp_path):
    assert run("resonance", "--fixture", "whitehead", "--depth", "9")[0] == cli.EXIT_INVALID
    doc = json.loads(fixture_text("whitehead"))
    doc["data"]["linking"] = [[0, 1], [2, 0]]
    path = tmp_path / "asym.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run("resonance", "--input", str(path))
    assert code == cli.EXIT_INVALID and "symmetric" in err


def test_exit_code_internal(monkeypatch):
    def boom(*_):
        raise InconsistentVerdict("forced")
    monkeypatch.setitem(cli.HANDLERS, "verdict", boom)
    assert run("verdict", "--fixture", "whitehead")[0] == cli.EXIT_INTERNAL


def test_input_file_matches_fixture(tmp_path):
    path = tmp_path / "w.json"
    path.write_text(fixture_text("whitehead"), encoding="utf-8")
    assert run("verdict", "--input", str(path))[1] == run("verdict", "--fixture", "whitehead")[1]


@pytest.mark.parametrize("name", fixture_names())
def test_check_passes_quickly(name):
    start = time.perf_counter()
    code, out, err = run("check", "--fixture", name)
    assert code == 0, err + out
    assert time.perf_counter() - start < 60


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jumploci.cli", "verdict", "--fixture", "hopf"],
                          capture_output=True, text=True)
    assert proc.returncode == cli.EXIT_PARSE
    proc = subprocess.run([sys.executable, "-m", "jumploci.cli", "verdict", "--fixture",
                           "link-hopf"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("formal")

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from bennequin.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_process(*argv):
    return subprocess.run(
        [sys.executable, "-m", "bennequin", *argv], capture_output=True, text=True, check=False
    )


@pytest.mark.parametrize(
    "argv, golden",
    [
        (("torus", "3", "5", "--json"), "torus_3_5.json"),
        (("braid", "1 1 1", "--strands", "2", "--json"), "braid_1_1_1.json"),
        (("front", "L1 R1", "--json"), "front_saucer.json"),
    ],
)
def test_golden_json(argv, golden):
    code, out = run(*argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_golden_json_via_process():
    res = run_process("torus", "3", "5", "--json")
    assert res.returncode == 0
    assert res.stdout == (GOLDEN / "torus_3_5.json").read_text(encoding="utf-8")


def test_json_top_level_schema():
    for argv in (("torus", "2", "3"), ("braid", "1 -2 1"), ("front", "L1 X1 R1")):
        _, out = run(*argv, "--json")
        assert list(json.loads(out)) == ["tool_version", "subject", "invariants", "bounds"]


def test_braid_trefoil():
    _, out = run("braid", "1 1 1", "--strands", "2", "--json")
    d = json.loads(out)
    assert d["invariants"]["self_linking"] == 1
    assert max(b["value"] for b in d["bounds"] if b["target"] == "s_sharp") == 1


def test_braid_empty_is_unknot():
    code, out = run("braid", "", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["subject"]["strands"] == 1
    assert d["invariants"]["self_linking"] == -1
    assert d["invariants"]["is_knot"] is True


def test_braid_single_crossing_is_knot():
    _, out = run("braid", "1", "--strands", "2", "--json")
    inv = json.loads(out)["invariants"]
    assert inv["components"] == 1 and inv["self_linking"] == -1


def test_braid_link_has_no_bounds():
    code, out = run("braid", "1 1", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["invariants"]["components"] == 2
    assert d["bounds"] == []
    code, out = run("braid", "1 1")
    assert "link" in out


def test_braid_from_file(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("1 2 1 2 1 2 1 2 1 2\n")
    _, out = run("braid", "--file", str(path), "--json")
    assert json.loads(out)["invariants"]["self_linking"] == 7


@pytest.mark.parametrize(
    "word, tb, abs_rot, s_sharp",
    [("L1 R1", -1, 0, -1), ("L1 L1 X2 X2 X2 R1 R1", 1, 0, 1), ("L1 X1 R1", -2, 1, -1)],
)
def test_front_examples(word, tb, abs_rot, s_sharp):
    _, out = run("front", word, "--json")
    d = json.loads(out)
    assert d["invariants"]["tb"] == tb
    assert abs(d["invariants"]["rot"]) == abs_rot
    assert max(b["value"] for b in d["bounds"] if b["target"] == "s_sharp") == s_sharp


def test_front_reverse_negates_rot():
    _, a = run("front", "L1 X1 R1", "--json")
    _, b = run("front", "L1 X1 R1", "--json", "--reverse")
    assert json.loads(a)["invariants"]["rot"] == -json.loads(b)["invariants"]["rot"]
    assert json.loads(b)["subject"]["orientation"] == "reversed"


def test_torus_human_output():
    code, out = run("torus", "3", "5")
    assert code == 0
    assert "s_sharp: 7" in out and "s: 8" in out and "g4: 4" in out


def test_verify_torus_equality_counts_pairs():
    code, out = run("verify", "torus-equality", "--max", "13", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["result"]["passed"] is True
    assert d["result"]["samples"] == 45


def test_verify_cobordism_chain():
    code, out = run("verify", "cobordism-chain", "--samples", "500", "--seed", "7")
    assert code == 0
    assert out.startswith("cobordism-chain: pass  samples=500")


@pytest.mark.parametrize("suite", ["markov", "pushoff", "resolution"])
def test_verify_other_suites(suite):
    code, out = run("verify", suite, "--samples", "50", "--json")
    assert code == 0
    assert json.loads(out)["result"]["passed"] is True


def test_verify_is_deterministic():
    assert run("verify", "pushoff", "--samples", "30", "--seed", "3", "--json") == run(
        "verify", "pushoff", "--samples", "30", "--seed", "3", "--json"
    )


# exit codes

def write_corpus(tmp_path, rows):
    path = tmp_path / "c.csv"
    path.write_text("id,kind,strands,word,invariant,value\n" + "".join(r + "\n" for r in rows))
    return path


def test_exit_zero_on_consistent_corpus(tmp_path):
    path = write_corpus(tmp_path, ["t23,braid,2,1 1 1,s_sharp,1", "t23,braid,2,1 1 1,g4,1"])
    res = run_process("corpus", str(path), "--json")
    assert res.returncode == 0
    assert json.loads(res.stdout)["summary"] == {"findings": 3, "violations": 0}


def test_exit_one_on_violation(tmp_path):
    path = write_corpus(tmp_path, ["t23,braid,2,1 1 1,s_sharp,-1"])
    res = run_process("corpus", str(path))
    assert res.returncode == 1
    assert "violated" in res.stdout and "sharp_bennequin" in res.stdout


def test_exit_two_on_parse_error():
    res = run_process("braid", "1 zero")
    assert res.returncode == 2
    assert "token 2" in res.stderr


@pytest.mark.parametrize(
    "argv",
    [
        ("front", "L1 L2 X2 X2 X2 R2 R1"),
        ("front", "L1 R2"),
        ("torus", "2", "4"),
        ("verify", "no-such-suite"),
        ("braid",),
        ("braid", "1", "--file", "x"),
        ("braid", "--file", "/nonexistent/path"),
        ("corpus", "/nonexistent.csv"),
        ("nonsense",),
    ],
)
def test_exit_two_on_usage_errors(argv):
    code, _ = run(*argv)
    assert code == 2


def test_exit_two_on_bad_corpus(tmp_path):
    path = write_corpus(tmp_path, ["t23,braid,2,1 1 1,s_sharp"])
    code, _ = run("corpus", str(path))
    assert code == 2

import json
import subprocess
import sys

import pytest

from tstacks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, code", [
    (["trace", "--stacks", "1", "--algo", "left", "4 1 3 2"], 0),
    (["trace", "--stacks", "3", "--algo", "left", "2 5 4 1 6 7 3"], 1),
    (["trace", "--stacks", "0", "--algo", "left", "1"], 2),
    (["check", "--stacks", "3", "--algo", "oracle", "2 5 4 1 6 7 3"], 0),
    (["check", "--stacks", "2", "--algo", "right", "3 2 4 1"], 1),
    (["check", "--stacks", "2", "--algo", "west", "3 2 4 1"], 1),
    (["check", "--stacks", "2", "--algo", "left", "3", "2", "4", "1"], 0),
    (["check", "--stacks", "2", "--algo", "left", "4 1 3 3"], 2),
    (["check", "--stacks", "2", "--algo", "left", "--prune", "3 2 4 1"], 2),
    (["count", "--stacks", "2", "--len", "9", "--algo", "oracle"], 3),
    (["count", "--stacks", "2", "--len", "4", "--algo", "bogus"], 2),
    (["compare", "--stacks", "2", "--len", "4", "--algo", "left"], 2),
    (["contains", "2 6 3 5 1 7 8 4", "2 5 4 1 6 7 3"], 0),
    (["contains", "4 1 3 2", "2 3 1"], 1),
    (["generate", "left-fail"], 2),
    (["generate", "left-fail", "--stacks", "2"], 2),
    ([], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_trace_is_json_lines(capsys):
    code, out, _ = run(capsys, "trace", "--stacks", "3", "--algo", "left", "2 5 4 1 6 7 3")
    lines = out.splitlines()
    records = [json.loads(ln) for ln in lines]
    assert records[0] == {"step": 1, "move": "push", "value": 2, "stacks": [[2], [], []], "emitted": 0}
    assert records[-1] == {"sorted": False, "blocked": 7, "gamma": 6}
    assert [r["step"] for r in records[:-1]] == list(range(1, len(records)))
    assert out.endswith("\n")


def test_trace_pretty(capsys):
    code, out, _ = run(capsys, "trace", "--stacks", "1", "--algo", "left", "--pretty", "4 1 3 2")
    assert code == 0
    assert out.splitlines()[0] == "step 0: out: - | [] | in: 4 1 3 2"
    assert out.splitlines()[-1] == "sorted"


def test_check_witness(capsys):
    code, out, _ = run(capsys, "check", "--stacks", "3", "--algo", "oracle", "--witness", "--prune",
                       "2 5 4 1 6 7 3")
    verdict, witness = out.splitlines()
    assert code == 0 and verdict == "sortable"
    moves = json.loads(witness)
    assert moves[-1]["emitted"] == 7


def test_count_output(capsys):
    code, out, _ = run(capsys, "count", "--stacks", "1", "--len", "5", "--algo", "left")
    assert (code, out) == (0, "n,t,decider,count\n5,1,greedy-left,42\n")
    code, out, _ = run(capsys, "count", "--stacks", "2", "--len", "3", "--algo", "oracle", "--format", "json")
    assert json.loads(out) == [{"n": 3, "t": 2, "decider": "oracle", "count": 6}]


def test_count_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("TSTACKS_WORKERS", "2")
    code, out, _ = run(capsys, "count", "--stacks", "2", "--len", "6", "--algo", "left,right")
    assert out == "n,t,decider,count\n6,2,greedy-left,512\n6,2,greedy-right,408\n"


def test_compare_lists_3241(capsys):
    code, out, _ = run(capsys, "compare", "--stacks", "2", "--len", "4", "--algo", "left,right")
    assert code == 0
    assert "3 2 4 1" in out.split("# only greedy-right")[0]


def test_generate(capsys):
    assert run(capsys, "generate", "right-fail", "--stacks", "3")[1] == "4 3 2 5 1\n"
    assert run(capsys, "generate", "left-fail", "--stacks", "3")[1] == "2 5 4 1 6 7 3\n"
    assert run(capsys, "generate", "superpattern", "--stacks", "3")[1] == "2 6 3 5 1 7 8 4\n"
    assert run(capsys, "generate", "insert", "--slot", "3", "--base", "3 2 1")[1] == "3 2 4 1\n"
    out = run(capsys, "generate", "lower-bound", "--stacks", "2", "--len", "4")[1]
    assert len(out.splitlines()) == 18


def test_closure(capsys):
    code, out, _ = run(capsys, "closure", "--stacks", "3", "--algo", "left", "2 6 3 5 1 7 8 4")
    assert code == 1 and "2 6 3 5 1 7 8 4 -> 2 5 4 1 6 7 3" in out.splitlines()
    assert run(capsys, "closure", "--stacks", "2", "--algo", "left", "--len", "6")[0] == 0


def test_verify_paper_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "figure-1", "--only", "named-examples")
    assert code == 0
    assert [ln.split()[0] for ln in out.splitlines()] == ["PASS", "PASS"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tstacks", "check", "--stacks", "1", "--algo", "left", "2 3 1"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == "not sortable\n"

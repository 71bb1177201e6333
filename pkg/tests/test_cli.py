import io
import subprocess
import sys

import pytest

from resetkit.automaton import cerny_automaton, is_reset_word, parse_dfa, parse_dfa_with_meta, parse_word, serialize_dfa
from resetkit.cli import main

C3_TEXT = serialize_dfa(cerny_automaton(3))


def run_cli(args, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda args, stdin="": run_cli(args, stdin, monkeypatch, capsys)


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "c3.dfa": C3_TEXT,
        "swap.dfa": "dfa 2 1\n0 0 1\n1 0 0\n",
        "unsat1.cnf": "p cnf 1 2\n1 0\n-1 0\n",
        "x1.cnf": "p cnf 1 1\n1 0\n",
        "or.cnf": "p cnf 2 1\n1 2 0\n",
        "bad.cnf": "p cnf 1 1\n1 2 0\n",
    }.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_check(cli, files):
    assert cli(["check", files["c3.dfa"]]) == (0, "SYNCHRONIZING\n", "")
    assert cli(["check", files["swap.dfa"]])[:2] == (1, "NOT-SYNCHRONIZING\n")


def test_gen_and_length_from_stdin(cli):
    code, out, _ = cli(["gen", "cerny", "-n", "3"])
    assert code == 0 and out == C3_TEXT
    assert cli(["length", "--method", "bfs"], out)[:2] == (0, "4\n")
    assert cli(["length", "-", "--method", "sat"], out)[:2] == (0, "4\nqueries=2\n")


def test_length_none(cli, files):
    assert cli(["length", files["swap.dfa"]])[:2] == (0, "NONE\n")
    assert cli(["length", files["swap.dfa"], "--method", "sat"])[:2] == (0, "NONE\n")


@pytest.mark.parametrize("method", ["bfs", "sat", "greedy"])
def test_solve(cli, files, method):
    code, out, _ = cli(["solve", files["c3.dfa"], "--method", method])
    w = parse_word(out.strip())
    assert code == 0 and is_reset_word(cerny_automaton(3), w)
    if method != "greedy":
        assert len(w) == 4
    assert cli(["solve", files["swap.dfa"], "--method", method])[1] == "NONE\n"


@pytest.mark.parametrize("method", ["bfs", "sat"])
def test_decide(cli, files, method):
    c3 = files["c3.dfa"]
    assert cli(["decide", c3, "-k", "4", "--shortest", "--method", method])[:2] == (0, "YES\n")
    assert cli(["decide", c3, "-k", "5", "--shortest", "--method", method])[:2] == (1, "NO\n")
    assert cli(["decide", c3, "-k", "5", "--method", method])[:2] == (0, "YES\n")
    assert cli(["decide", c3, "-k", "3", "--method", method])[:2] == (1, "NO\n")


def test_count(cli, files):
    assert cli(["count", files["c3.dfa"], "-k", "4"])[:2] == (0, "1\n")
    assert cli(["count", files["c3.dfa"], "-k", "5"])[:2] == (0, "4\n")


def test_verify_maxsat_example(cli, files):
    code, out, _ = cli(["verify", "maxsat", files["unsat1.cnf"]])
    assert code == 0 and out.splitlines()[-1] == "RESULT PASS"
    assert "l=21" in out


@pytest.mark.parametrize("kind,inputs", [
    ("satunsat", ["x1.cnf", "x1.cnf"]),
    ("fsat", ["unsat1.cnf"]),
    ("parsimony", ["or.cnf"]),
])
def test_verify_other_kinds(cli, files, kind, inputs):
    code, out, _ = cli(["verify", kind] + [files[i] for i in inputs])
    assert code == 0 and out.endswith("RESULT PASS\n")


def test_verify_skip_exits_nonzero(cli, files):
    code, out, _ = cli(["verify", "maxsat", files["unsat1.cnf"], "--method", "bfs", "--budget", "3"])
    assert code == 1 and out.endswith("RESULT SKIP\n")


def test_reduce_writes_artifacts(cli, files, tmp_path):
    out_path = tmp_path / "g.dfa"
    assert cli(["reduce", "maxsat", files["unsat1.cnf"], "-o", str(out_path)])[:2] == (0, "")
    a, meta = parse_dfa_with_meta(out_path.read_text())
    assert meta["lambda"] == "13" and meta["n"] == "2" and meta["k"] == "1"
    code, out, _ = cli(["reduce", "binarize", str(out_path)])
    b, bmeta = parse_dfa_with_meta(out)
    assert code == 0 and b.state_count == 3 * (a.state_count - 2) + 3 and bmeta["kind"] == "binarized"
    assert cli(["length"], out)[1] == "42\n"


def test_reduce_satunsat_and_fsat(cli, files):
    code, out, _ = cli(["reduce", "satunsat", files["x1.cnf"], files["x1.cnf"]])
    a, meta = parse_dfa_with_meta(out)
    assert code == 0 and meta["k"] == "2"
    assert cli(["length"], out)[1] == "4\n"
    code, out, _ = cli(["reduce", "fsat", files["or.cnf"]])
    a, meta = parse_dfa_with_meta(out)
    assert meta["K"] == "4" and meta["decode"] == "2,3"
    assert cli(["count", "-k", meta["K"]], out)[1] == "3\n"


def test_binarize_needs_states(cli, files):
    code, _, err = cli(["reduce", "binarize", files["c3.dfa"]])
    assert code == 2 and "meta s" in err


def test_usage_and_parse_errors(cli, files):
    code, out, err = cli(["check", "-"], "dfa 2 1\n0 0 0\n")
    assert code == 2 and out == "" and "line" in err
    assert cli(["verify", "fsat", files["bad.cnf"]])[0] == 2
    assert cli(["verify", "satunsat", files["x1.cnf"]])[0] == 2
    assert cli(["length", "/does/not/exist"])[0] == 2
    assert cli(["count", files["c3.dfa"], "-k", "-1"])[0] == 2
    assert cli(["gen", "cerny", "-n", "1"])[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_budget_exit_code(cli):
    text = serialize_dfa(cerny_automaton(9))
    code, out, err = cli(["length", "--budget", "10"], text)
    assert code == 3 and out == "" and "budget" in err


def test_oracle_failure_exit_code(cli, files):
    code, out, err = cli(["length", files["c3.dfa"], "--method", "sat", "--sat-solver", "/no/such/solver"])
    # the greedy shortcut answers the large probes, but some probe needs the solver
    assert code == 10 and out == ""


def test_deterministic_output(cli, files):
    first = cli(["reduce", "maxsat", files["unsat1.cnf"]])[1]
    assert cli(["reduce", "maxsat", files["unsat1.cnf"]])[1] == first


def test_console_script_pipeline():
    gen = subprocess.run([sys.executable, "-m", "resetkit.cli", "gen", "cerny", "-n", "4"],
                         capture_output=True, text=True, check=True)
    res = subprocess.run([sys.executable, "-m", "resetkit.cli", "length", "-"], input=gen.stdout,
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "9\n"

import itertools
import os
import stat
import sys

import numpy as np
import pytest

from resetkit.automaton import Dfa, cerny_automaton, cubic_bound, is_reset_word
from resetkit.cnf import Cnf
from resetkit.errors import BudgetExceeded, InputError, OracleFailure
from resetkit.exact import shortest_reset_length
from resetkit.sat import (
    SOLVER_ENV,
    BoundedResetQuery,
    Oracle,
    dpll_solve,
    encode_short_reset,
    external_solve,
    has_reset_word_of_length,
    is_shortest_length,
    parse_solver_output,
    shortest_length_via_oracle,
    shortest_word_via_oracle,
)

from corpus import constant_letter_dfa, naive_reset_words, one_state_dfa, random_corpus, swap_dfa

C3 = cerny_automaton(3)


def _sat(a, k, prefix=(), prune=True):
    enc = encode_short_reset(BoundedResetQuery(a, k, tuple(prefix)), prune=prune)
    model = dpll_solve(enc.cnf)
    return enc, model


def test_encode_examples():
    _, model = _sat(one_state_dfa(), 0)
    assert model is not None
    assert _sat(C3, 3)[1] is None
    enc, model = _sat(C3, 4)
    assert is_reset_word(C3, enc.decode(model))


def test_encode_variable_layout():
    enc = encode_short_reset(BoundedResetQuery(C3, 4), prune=False)
    assert enc.letter_var(1, 0) == 1 and enc.letter_var(4, 1) == 8
    assert enc.state_var(0, 0) == 9 and enc.state_var(2, 4) == 8 + 15
    # ladder adds n - 1 auxiliaries after the presence variables
    assert enc.cnf.variable_count == 8 + 15 + 2


def test_encode_rejects_long_prefix():
    with pytest.raises(InputError):
        BoundedResetQuery(C3, 1, (0, 1))
    with pytest.raises(InputError):
        BoundedResetQuery(C3, 2, (5,))
    with pytest.raises(InputError):
        BoundedResetQuery(C3, -1)


@pytest.mark.parametrize("prune", [True, False])
def test_encoding_matches_enumeration(prune):
    for a in random_corpus(60, seed=41, max_states=6, max_letters=2):
        for k in range(0, 7):
            words = naive_reset_words(a, k)
            enc, model = _sat(a, k, prune=prune)
            assert (model is not None) == bool(words)
            if model is not None:
                assert enc.decode(model) in words
            if k >= 2:
                for prefix in itertools.product(a.letters, repeat=2):
                    has = any(w[:2] == prefix for w in words)
                    assert (_sat(a, k, prefix, prune)[1] is not None) == has


def test_has_reset_word_examples():
    assert has_reset_word_of_length(C3, 4)
    assert not has_reset_word_of_length(C3, 3)
    assert has_reset_word_of_length(C3, 10 ** 9)
    assert not has_reset_word_of_length(swap_dfa(), 10 ** 9)


def test_is_shortest_examples():
    assert is_shortest_length(C3, 4)
    assert not is_shortest_length(C3, 5)
    assert not is_shortest_length(C3, 3)
    assert is_shortest_length(one_state_dfa(), 0)


def test_algorithm1_examples():
    assert shortest_length_via_oracle(C3) == (4, 2)
    assert shortest_length_via_oracle(cerny_automaton(4)) == (9, 3)
    assert shortest_length_via_oracle(one_state_dfa()) == (0, 0)
    assert shortest_length_via_oracle(swap_dfa()) is None


def test_algorithm2_examples():
    assert shortest_word_via_oracle(one_state_dfa()) == ()
    assert shortest_word_via_oracle(constant_letter_dfa()) == (0,)
    assert shortest_word_via_oracle(Dfa.from_table([[0, 1], [0, 1]])) == (0,)
    w = shortest_word_via_oracle(C3)
    assert len(w) == 4 and is_reset_word(C3, w)


def test_oracle_counts_each_question_once():
    o = Oracle()
    for k in range(6):
        o.has_reset_word(C3, k)
    assert o.queries == 6
    assert o.sat_calls <= 6


def test_shortcuts_do_not_change_answers():
    for a in random_corpus(60, seed=42, max_states=7, synchronizing=True):
        plain, fast = Oracle(shortcuts=False, prune=False), Oracle()
        for k in range(0, 9):
            assert plain.has_reset_word(a, k) == fast.has_reset_word(a, k) == (k >= shortest_reset_length(a))


def test_monotone_in_length():
    for a in random_corpus(80, seed=43, max_states=7):
        answers = [has_reset_word_of_length(a, k) for k in range(12)]
        assert all(not x or y for x, y in zip(answers, answers[1:]))


def test_oracle_conflict_budget_surfaces():
    o = Oracle(shortcuts=False, prune=False, max_conflicts=1)
    with pytest.raises(BudgetExceeded):
        o.has_reset_word(cerny_automaton(6), 24)


def test_dpll_trivia():
    assert dpll_solve(Cnf.of([[1]])) == {1: True}
    assert dpll_solve(Cnf.of([[1], [-1]])) is None
    assert dpll_solve(Cnf.of([[1], []])) is None
    assert dpll_solve(Cnf(0, ())) == {}


# --- external solver protocol -------------------------------------------------

SOLVER_TEMPLATE = """#!{python}
import sys
from resetkit.cnf import parse_dimacs
from resetkit.sat.oracle import dpll_solve
f = parse_dimacs(open(sys.argv[1]).read())
model = dpll_solve(f)
mode = {mode!r}
if mode == "crash":
    sys.exit(3)
if mode == "unknown":
    print("s UNKNOWN"); sys.exit(0)
if model is None:
    print("s UNSATISFIABLE")
    sys.exit(10 if mode == "liar" else 20)
print("s SATISFIABLE")
lits = [v if model[v] else -v for v in sorted(model)]
for i in range(0, len(lits), 7):
    print("v " + " ".join(map(str, lits[i:i + 7])))
print("v 0")
sys.exit(10)
"""


def _solver(tmp_path, mode="ok"):
    path = tmp_path / f"solver_{mode}.py"
    path.write_text(SOLVER_TEMPLATE.format(python=sys.executable, mode=mode))
    path.chmod(path.stat().st_mode | stat.S_IEXEC)
    return str(path)


def test_external_solver_agrees_with_internal(tmp_path):
    o = Oracle(_solver(tmp_path), shortcuts=False)
    assert o.kind == "external"
    assert o.has_reset_word(C3, 4) and not o.has_reset_word(C3, 3)
    w = o.find_reset_word(C3, 4)
    assert is_reset_word(C3, w)
    assert shortest_length_via_oracle(cerny_automaton(4), Oracle(_solver(tmp_path)))[0] == 9


@pytest.mark.parametrize("mode", ["crash", "unknown", "liar"])
def test_external_solver_failures(tmp_path, mode):
    o = Oracle(_solver(tmp_path, mode), shortcuts=False)
    with pytest.raises(OracleFailure):
        o.has_reset_word(C3, 3)


def test_missing_solver_binary():
    with pytest.raises(OracleFailure):
        external_solve(Cnf.of([[1]]), "/nonexistent/solver")


def test_environment_variable(monkeypatch, tmp_path):
    monkeypatch.setenv(SOLVER_ENV, _solver(tmp_path))
    assert Oracle.from_environment().kind == "external"
    assert Oracle.from_environment("/explicit").solver == "/explicit"
    monkeypatch.delenv(SOLVER_ENV)
    assert Oracle.from_environment().kind == "internal"


def test_parse_solver_output():
    assert parse_solver_output("s SATISFIABLE\nv 1 -2\nv 0\n", 10, 3) == {1: True, 2: False, 3: False}
    assert parse_solver_output("s UNSATISFIABLE\n", 20, 3) is None
    assert parse_solver_output("", 20, 1) is None
    with pytest.raises(OracleFailure):
        parse_solver_output("s SATISFIABLE\n", 20, 1)
    with pytest.raises(OracleFailure):
        parse_solver_output("", 0, 1)
    with pytest.raises(OracleFailure):
        parse_solver_output("s INDETERMINATE\n", 10, 1)

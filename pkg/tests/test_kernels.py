"""The compiled and pure-Python kernels must agree on every input."""

import numpy as np
import pytest

from resetkit import kernels
from resetkit.errors import BudgetExceeded

from corpus import naive_models, random_cnf, random_dfa

compiled = kernels.compiled_backend
py = kernels.python_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


def test_backend_selection():
    assert kernels.BACKEND in ("cython", "python")
    assert py.BACKEND == "python"
    if compiled is not None:
        assert kernels.BACKEND == "cython"


def _same(x, y):
    assert len(x) == len(y)
    for a, b in zip(x, y):
        if isinstance(a, np.ndarray):
            np.testing.assert_array_equal(a, b)
        else:
            assert a == b


@needs_compiled
@pytest.mark.parametrize("stop", [True, False])
def test_explore_agrees(stop):
    rng = np.random.default_rng(3)
    for _ in range(150):
        n, m = int(rng.integers(1, 12)), int(rng.integers(1, 4))
        t = random_dfa(rng, n, m).table
        depth = int(rng.integers(-1, 6))
        _same(compiled.explore_subsets(t, 1 << 22, stop, depth), py.explore_subsets(t, 1 << 22, stop, depth))


@needs_compiled
def test_explore_wide_automaton_agrees():
    # more than 64 states exercises the multi-word bitsets
    rng = np.random.default_rng(5)
    t = random_dfa(rng, 90, 2).table
    _same(compiled.explore_subsets(t, 1 << 22, True, -1), py.explore_subsets(t, 1 << 22, True, -1))


@needs_compiled
def test_pair_distances_agree():
    rng = np.random.default_rng(4)
    for _ in range(150):
        t = random_dfa(rng, int(rng.integers(1, 30)), int(rng.integers(1, 4))).table
        _same(compiled.pair_distances(t), py.pair_distances(t))


@needs_compiled
def test_dpll_agrees():
    rng = np.random.default_rng(6)
    for _ in range(300):
        f = random_cnf(rng, int(rng.integers(1, 9)), int(rng.integers(1, 25)))
        a = compiled.dpll_solve(f.variable_count, f.clauses, -1)
        b = py.dpll_solve(f.variable_count, f.clauses, -1)
        assert (a is None) == (b is None)
        if a is not None:
            assert list(a) == list(b)


@pytest.mark.parametrize("backend", [b for b in (compiled, py) if b is not None], ids=lambda b: b.BACKEND)
def test_budget_is_enforced(backend):
    from resetkit.automaton import cerny_automaton
    with pytest.raises(BudgetExceeded):
        backend.explore_subsets(cerny_automaton(8).table, 10, True, -1)


@pytest.mark.parametrize("backend", [b for b in (compiled, py) if b is not None], ids=lambda b: b.BACKEND)
def test_dpll_models_are_models(backend):
    rng = np.random.default_rng(8)
    for _ in range(200):
        f = random_cnf(rng, int(rng.integers(1, 7)), int(rng.integers(1, 15)))
        model = backend.dpll_solve(f.variable_count, f.clauses, -1)
        models = naive_models(f)
        assert (model is None) == (not models)
        if model is not None:
            alpha = {v: bool(model[v]) for v in range(1, f.variable_count + 1)}
            assert alpha in models


@pytest.mark.parametrize("backend", [b for b in (compiled, py) if b is not None], ids=lambda b: b.BACKEND)
def test_dpll_conflict_budget(backend):
    # pigeonhole 6 -> 5 is unsatisfiable and needs many conflicts
    holes, pigeons = 5, 6
    var = lambda p, h: p * holes + h + 1
    clauses = [tuple(var(p, h) for h in range(holes)) for p in range(pigeons)]
    for h in range(holes):
        for p in range(pigeons):
            for r in range(p + 1, pigeons):
                clauses.append((-var(p, h), -var(r, h)))
    with pytest.raises(BudgetExceeded):
        backend.dpll_solve(pigeons * holes, clauses, 5)


def test_pure_python_env_switch():
    import subprocess
    import sys
    code = "from resetkit import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"RESETKIT_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"

"""NP oracle for bounded reset-word questions: internal DPLL or an external solver."""

from __future__ import annotations

import os
import subprocess
import tempfile
from typing import Sequence

from ..automaton import Dfa, Word, cubic_bound, image
from ..cnf import Assignment, Cnf, to_dimacs
from ..errors import InputError, OracleFailure
from ..greedy import greedy_completion
from ..kernels import dpll_solve as _dpll_kernel
from .encode import BoundedResetQuery, encode_short_reset

SOLVER_ENV = "RESETKIT_SAT_SOLVER"


def dpll_solve(f: Cnf, max_conflicts: int = -1) -> Assignment | None:
    """Complete DPLL decision with witness (lowest variable first, True first)."""
    if any(not c for c in f.clauses):
        return None
    model = _dpll_kernel(f.variable_count, f.clauses, max_conflicts)
    if model is None:
        return None
    return {v: bool(model[v]) for v in range(1, f.variable_count + 1)}


def parse_solver_output(text: str, returncode: int, variable_count: int) -> Assignment | None:
    """Interpret SAT-competition output; exit codes 10/20 are authoritative."""
    status = None
    values: dict[int, bool] = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("s "):
            word = line[2:].strip()
            if word == "SATISFIABLE":
                status = True
            elif word == "UNSATISFIABLE":
                status = False
            else:
                raise OracleFailure(f"solver reported {word!r}")
        elif line.startswith("v "):
            for tok in line[2:].split():
                lit = int(tok)
                if lit:
                    values[abs(lit)] = lit > 0
    if returncode == 10:
        result = True
    elif returncode == 20:
        result = False
    else:
        raise OracleFailure(f"solver exited with code {returncode}")
    if status is not None and status != result:
        raise OracleFailure("solver status line contradicts its exit code")
    if not result:
        return None
    # unlisted variables are don't-cares
    return {v: values.get(v, False) for v in range(1, variable_count + 1)}


def external_solve(f: Cnf, solver: str, timeout: float | None = None) -> Assignment | None:
    with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False) as fh:
        fh.write(to_dimacs(f))
        path = fh.name
    try:
        proc = subprocess.run([solver, path], capture_output=True, text=True, timeout=timeout)
    except (OSError, subprocess.TimeoutExpired) as exc:
        raise OracleFailure(f"could not run solver {solver!r}: {exc}") from exc
    finally:
        os.unlink(path)
    return parse_solver_output(proc.stdout, proc.returncode, f.variable_count)


class Oracle:
    """Answers "does ``a`` have a reset word of length k starting with u?".

    Every such question increments ``queries`` exactly once. Before encoding, the
    length is clamped to ``|u| + (n^3 - n)/6``, and the question is answered YES
    outright when the prefix followed by a greedy completion already fits in
    ``k`` letters (padding keeps it a reset word). Otherwise the question is
    encoded as CNF and handed to the internal DPLL or to an external solver.

    Not thread-safe; create one per thread.
    """

    def __init__(self, solver: str | None = None, *, shortcuts: bool = True, prune: bool = True,
                 max_conflicts: int = -1, timeout: float | None = None):
        self.solver = solver
        self.shortcuts = shortcuts
        self.prune = prune
        self.max_conflicts = max_conflicts
        self.timeout = timeout
        self.queries = 0
        self.sat_calls = 0

    @classmethod
    def from_environment(cls, solver: str | None = None, **kwargs) -> "Oracle":
        return cls(solver or os.environ.get(SOLVER_ENV) or None, **kwargs)

    @property
    def kind(self) -> str:
        return "external" if self.solver else "internal"

    def solve(self, f: Cnf) -> Assignment | None:
        self.sat_calls += 1
        if self.solver:
            return external_solve(f, self.solver, self.timeout)
        return dpll_solve(f, self.max_conflicts)

    def has_reset_word(self, a: Dfa, k: int, prefix: Sequence[int] = ()) -> bool:
        self.queries += 1
        prefix = tuple(prefix)
        if k < 0:
            raise InputError("length must be nonnegative")
        if len(prefix) > k:
            return False
        if a.state_count == 1:
            return True
        k = min(k, len(prefix) + cubic_bound(a.state_count))
        if self.shortcuts:
            start = image(a, a.full_set(), prefix)
            tail = greedy_completion(a, start)
            if tail is None:
                return False
            if len(prefix) + len(tail) <= k:
                return True
        enc = encode_short_reset(BoundedResetQuery(a, k, prefix), prune=self.prune)
        return self.solve(enc.cnf) is not None

    def find_reset_word(self, a: Dfa, k: int, prefix: Sequence[int] = ()) -> Word | None:
        """Witnessing variant of ``has_reset_word`` (internal solver or solvers printing models)."""
        self.queries += 1
        enc = encode_short_reset(BoundedResetQuery(a, k, tuple(prefix)), prune=self.prune)
        model = self.solve(enc.cnf)
        return None if model is None else enc.decode(model)


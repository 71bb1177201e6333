"""Ground-truth solvers used to check everything else.

Reset-word questions are answered by breadth-first search over the subsets
reachable from the full state set. SAT, #SAT and MAX-SAT are answered by
exhaustive enumeration under a variable cap.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .automaton import Dfa, Word
from .cnf import Assignment, Cnf
from .errors import BudgetExceeded, InputError
from .kernels import explore_subsets

DEFAULT_SUBSET_BUDGET = 1 << 22
DEFAULT_BRUTE_CAP = 20


@dataclass(frozen=True)
class SubsetGraph:
    """Reachable part of the subset automaton, in BFS order (index 0 is Q)."""

    succ: np.ndarray
    parent: np.ndarray
    letter: np.ndarray
    depth: np.ndarray
    size: np.ndarray
    found: int

    @classmethod
    def explore(cls, a: Dfa, budget=DEFAULT_SUBSET_BUDGET, stop_at_singleton=True, max_depth=-1):
        return cls(*explore_subsets(a.table, budget, stop_at_singleton, max_depth))

    def __len__(self) -> int:
        return len(self.depth)

    def path_to(self, node: int) -> Word:
        word = []
        while node > 0:
            word.append(int(self.letter[node]))
            node = int(self.parent[node])
        return tuple(reversed(word))


@dataclass(frozen=True)
class SearchOutcome:
    """Shortest reset word search result; ``length is None`` means not synchronizing."""

    length: int | None
    word: Word | None

    @property
    def synchronizing(self) -> bool:
        return self.length is not None


def shortest_reset_search(a: Dfa, budget: int = DEFAULT_SUBSET_BUDGET) -> SearchOutcome:
    g = SubsetGraph.explore(a, budget, stop_at_singleton=True)
    if g.found < 0:
        return SearchOutcome(None, None)
    return SearchOutcome(int(g.depth[g.found]), g.path_to(g.found))


def shortest_reset_length(a: Dfa, budget: int = DEFAULT_SUBSET_BUDGET) -> int | None:
    return shortest_reset_search(a, budget).length


def shortest_reset_word(a: Dfa, budget: int = DEFAULT_SUBSET_BUDGET) -> Word | None:
    """Shortest reset word; ties go to the BFS-first word (letters tried in ascending order)."""
    return shortest_reset_search(a, budget).word


def count_reset_words(a: Dfa, k: int, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Number of length-``k`` reset words, by counting paths in the subset graph."""
    if k < 0:
        raise InputError("length must be nonnegative")
    g = SubsetGraph.explore(a, budget, stop_at_singleton=False, max_depth=k)
    succ = g.succ.tolist()
    counts = {0: 1}
    for _ in range(k):
        nxt: dict[int, int] = defaultdict(int)
        for node, cnt in counts.items():
            for target in succ[node]:
                nxt[target] += cnt
        counts = nxt
    size = g.size
    return sum(cnt for node, cnt in counts.items() if size[node] == 1)


def reset_words_of_length(a: Dfa, k: int, limit: int = 4096, budget: int = DEFAULT_SUBSET_BUDGET) -> list[Word]:
    """All length-``k`` reset words in lexicographic order.

    Walks the subset graph and only descends into subsets that can still reach a
    singleton in the remaining number of steps. Raises ``BudgetExceeded`` when
    more than ``limit`` words exist.
    """
    if k < 0:
        raise InputError("length must be nonnegative")
    g = SubsetGraph.explore(a, budget, stop_at_singleton=False, max_depth=k)
    succ = g.succ
    total = len(g)
    # alive[r] marks subsets from which some length-r word reaches a singleton
    alive = [g.size == 1]
    for r in range(1, k + 1):
        prev = alive[-1]
        cur = np.zeros(total, dtype=bool)
        expanded = succ[:, 0] >= 0
        for c in range(a.letter_count):
            cur[expanded] |= prev[succ[expanded, c]]
        alive.append(cur)
    out: list[Word] = []

    def walk(node, r, prefix):
        if r == 0:
            out.append(tuple(prefix))
            if len(out) > limit:
                raise BudgetExceeded(f"more than {limit} reset words of length {k}")
            return
        for c in range(a.letter_count):
            nxt = int(succ[node, c])
            if alive[r - 1][nxt]:
                prefix.append(c)
                walk(nxt, r - 1, prefix)
                prefix.pop()

    if alive[k][0]:
        walk(0, k, [])
    return out


# --- brute-force SAT family ------------------------------------------------------


def _check_cap(f: Cnf, cap: int) -> None:
    if f.variable_count > cap:
        raise BudgetExceeded(f"{f.variable_count} variables exceed the brute-force cap of {cap}")


def _chunks(k: int, size: int = 1 << 16):
    """Yield (start index, bool matrix) blocks of assignments in ascending binary order.

    Row ``i`` encodes the assignment whose bits, read x1 first, spell ``i``.
    """
    total = 1 << k
    shifts = np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, size):
        idx = np.arange(start, min(total, start + size), dtype=np.int64)
        yield start, ((idx[:, None] >> shifts[None, :]) & 1).astype(bool)


def _clause_values(f: Cnf, bits: np.ndarray) -> np.ndarray:
    rows = bits.shape[0]
    out = np.zeros((rows, len(f.clauses)), dtype=bool)
    for i, clause in enumerate(f.clauses):
        col = np.zeros(rows, dtype=bool)
        for lit in clause:
            col |= bits[:, lit - 1] if lit > 0 else ~bits[:, -lit - 1]
        out[:, i] = col
    return out


def _to_assignment(k: int, index: int) -> Assignment:
    return {j: bool(index >> (k - j) & 1) for j in range(1, k + 1)}


def brute_sat(f: Cnf, cap: int = DEFAULT_BRUTE_CAP) -> Assignment | None:
    """First satisfying assignment in ascending binary order of (x1..xk), or None."""
    _check_cap(f, cap)
    for start, bits in _chunks(f.variable_count):
        ok = _clause_values(f, bits).all(axis=1)
        if ok.any():
            return _to_assignment(f.variable_count, start + int(np.argmax(ok)))
    return None


def count_sat(f: Cnf, cap: int = DEFAULT_BRUTE_CAP) -> int:
    _check_cap(f, cap)
    return sum(int(_clause_values(f, bits).all(axis=1).sum()) for _, bits in _chunks(f.variable_count))


def max_sat_assignment(f: Cnf, cap: int = DEFAULT_BRUTE_CAP) -> tuple[int, Assignment]:
    """Maximum number of simultaneously satisfied clauses with a first optimal assignment."""
    _check_cap(f, cap)
    best, best_index = -1, 0
    for start, bits in _chunks(f.variable_count):
        sat = _clause_values(f, bits).sum(axis=1)
        i = int(np.argmax(sat))
        if sat[i] > best:
            best, best_index = int(sat[i]), start + i
    return best, _to_assignment(f.variable_count, best_index)


def max_sat_size(f: Cnf, cap: int = DEFAULT_BRUTE_CAP) -> int:
    return max_sat_assignment(f, cap)[0]

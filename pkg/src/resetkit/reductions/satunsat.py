"""SAT-UNSAT to SHORTEST-RESET-WORD gadget, also reused for FSAT.

Automaton over {0, 1}. For every clause there is a chain

    X⊥ --0--> X⊤ --1--> X1 --> X2 --> ... --> Xk --> exhaustion target

where ``Xj`` jumps to the sink ``s`` on the letters that satisfy the clause through
variable ``j`` and advances on the others. P-chains (clauses of phi) exhaust into
``t1``, Q-chains (clauses of psi) exhaust into ``t2``; ``t1 -> t2 -> s`` on both
letters. One extra guard P-chain exits only at position ``k`` (on either letter), so
no reset word is shorter than ``k + 2``.

With ``k`` the combined variable count this gives: both satisfiable -> shortest
``k + 2``; phi satisfiable, psi not -> shortest ``k + 3``; phi unsatisfiable ->
shortest at least ``k + 4``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..automaton import Dfa, Word
from ..cnf import Assignment, Cnf
from ..errors import InputError

SINK, T1, T2 = 0, 1, 2


def literal_sets(f: Cnf, k: int | None = None) -> list[list[frozenset[int]]]:
    """``M[i][j-1]``: letters (0 = false, 1 = true) by which X_j satisfies clause i."""
    k = f.variable_count if k is None else k
    out = []
    for clause in f.clauses:
        row = [set() for _ in range(k)]
        for lit in clause:
            row[abs(lit) - 1].add(1 if lit > 0 else 0)
        out.append([frozenset(s) for s in row])
    return out


def normalize_pair(phi: Cnf, psi: Cnf) -> tuple[Cnf, Cnf]:
    """Rename psi's variables above phi's and pad the shorter formula by repeating
    its last clause until both have the same number of clauses."""
    if not phi.clauses or not psi.clauses:
        raise InputError("both formulas need at least one clause")
    shift = phi.variable_count
    psi_clauses = [tuple(x + shift if x > 0 else x - shift for x in c) for c in psi.clauses]
    phi_clauses = list(phi.clauses)
    while len(phi_clauses) < len(psi_clauses):
        phi_clauses.append(phi_clauses[-1])
    while len(psi_clauses) < len(phi_clauses):
        psi_clauses.append(psi_clauses[-1])
    k = phi.variable_count + psi.variable_count
    return (
        Cnf(k, tuple(phi_clauses), phi.allow_empty_clause),
        Cnf(k, tuple(psi_clauses), psi.allow_empty_clause),
    )


@dataclass(frozen=True)
class ChainGadget:
    """Automaton built from P-chains and Q-chains plus where each chain lives."""

    automaton: Dfa
    variable_count: int
    p_chains: tuple[int, ...]  # index of each chain's ⊥ state
    q_chains: tuple[int, ...]
    guard: int


def _build_chains(p_sets, q_sets, k: int) -> ChainGadget:
    if k < 1:
        raise InputError("gadget needs at least one variable")
    # guard chain: exits only at the last position, on either letter
    guard_sets = [frozenset()] * (k - 1) + [frozenset({0, 1})]
    chains = [(sets, T1, f"P{i + 1}") for i, sets in enumerate(p_sets)]
    chains.append((guard_sets, T1, "G"))
    chains += [(sets, T2, f"Q{i + 1}") for i, sets in enumerate(q_sets)]

    rows: list[list[int]] = [[SINK, SINK], [T2, T2], [SINK, SINK]]
    labels = ["s", "t1", "t2"]
    starts = []
    for sets, exhaust, name in chains:
        bot = len(rows)
        top, first = bot + 1, bot + 2
        starts.append(bot)
        rows.append([top, bot])  # ⊥: 0 -> ⊤, 1 -> ⊥
        rows.append([top, first])  # ⊤: 0 -> ⊤, 1 -> position 1
        labels += [f"{name}_bot", f"{name}_top"]
        for j in range(k):
            advance = first + j + 1 if j + 1 < k else exhaust
            rows.append([SINK if a in sets[j] else advance for a in (0, 1)])
            labels.append(f"{name}_{j + 1}")
    a = Dfa.from_table(rows, state_labels=labels)
    n_p = len(p_sets)
    return ChainGadget(a, k, tuple(starts[:n_p]), tuple(starts[n_p + 1:]), starts[n_p])


@dataclass(frozen=True)
class SatUnsatGadget:
    phi: Cnf
    psi: Cnf
    chains: ChainGadget

    @property
    def automaton(self) -> Dfa:
        return self.chains.automaton

    @property
    def k(self) -> int:
        return self.chains.variable_count

    @property
    def thresholds(self) -> tuple[int, int, int]:
        return self.k + 2, self.k + 3, self.k + 4

    def witness(self, alpha: Assignment, extra: Word = ()) -> Word:
        """The word ``01 w`` (plus ``extra``) with ``w_j = 1`` iff X_j is true."""
        return (0, 1) + tuple(int(alpha[j]) for j in range(1, self.k + 1)) + tuple(extra)

    def meta(self) -> dict[str, object]:
        return {"kind": "satunsat", "k": self.k, "n": self.phi.clause_count,
                "thresholds": ",".join(map(str, self.thresholds))}


def build_sat_unsat_gadget(phi: Cnf, psi: Cnf, normalized: bool = False) -> SatUnsatGadget:
    """Gadget for the pair ``(phi, psi)``.

    The pair is passed through ``normalize_pair`` unless ``normalized`` says it
    already shares one variable range with disjoint variables and equal clause
    counts (normalizing twice would shift psi again).
    """
    if normalized:
        if phi.variable_count != psi.variable_count or phi.clause_count != psi.clause_count:
            raise InputError("normalized pair needs equal variable and clause counts")
        phi_n, psi_n = phi, psi
    else:
        phi_n, psi_n = normalize_pair(phi, psi)
    k = phi_n.variable_count
    chains = _build_chains(literal_sets(phi_n, k), literal_sets(psi_n, k), k)
    return SatUnsatGadget(phi_n, psi_n, chains)

"""MAX-SAT-SIZE to shortest reset length, and the two-letter re-encoding.

Three-letter gadget (letters 0, 1 and ``$`` = 2), per clause ``i``:

* a 1-chain ``P(i,1..lam)``: 1 advances (``P(i,lam)`` on 1 enters ``Q(i,1)``),
  0 restarts at ``P(i,1)``;
* a Q-chain ``Q(i,1..k)`` as in the chain gadget, except that exhausting
  ``Q(i,k)`` enters ``R(i,-2)``;
* a selector block ``R(i,-2..n+1)`` that reaches the sink only by reading the
  infix ``1 1 0^i 1 0^(n-i+1)``;
* ``$`` sends every P, Q and R state of clause ``i`` back to ``P(i,1)``.

Plus the absorbing sink ``s`` and a state ``t`` that loops on 0 and 1 and enters
``s`` on ``$``. With ``lam = k + n(n+4)``, an assignment satisfying at least
``n - m`` clauses exists iff a reset word of length ``1 + lam + k + m(n+4)``
exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..automaton import Dfa, Word
from ..cnf import Assignment, Cnf, clause_satisfied
from ..errors import InputError
from .satunsat import literal_sets

ZERO, ONE, DOLLAR = 0, 1, 2
SINK, TRAP = 0, 1


@dataclass(frozen=True)
class MaxSatGadget:
    phi: Cnf
    automaton: Dfa
    lam: int
    sink: int = SINK
    trap: int = TRAP

    @property
    def n(self) -> int:
        return self.phi.clause_count

    @property
    def k(self) -> int:
        return self.phi.variable_count

    def length_for(self, m: int) -> int:
        """Reset length matching "all but ``m`` clauses satisfiable"."""
        return 1 + self.lam + self.k + m * (self.n + 4)

    def witness(self, alpha: Assignment) -> Word:
        """``$ 1^lam x_1..x_k`` followed by the selector infix of every unsatisfied clause."""
        n = self.n
        word = [DOLLAR] + [ONE] * self.lam + [int(alpha[j]) for j in range(1, self.k + 1)]
        for i, clause in enumerate(self.phi.clauses, 1):
            if not clause_satisfied(clause, alpha):
                word += selector(i, n)
        return tuple(word)

    def meta(self) -> dict[str, object]:
        return {"kind": "maxsat", "n": self.n, "k": self.k, "lambda": self.lam,
                "s": self.sink, "t": self.trap}


def selector(i: int, n: int) -> list[int]:
    """The infix ``1 1 0^i 1 0^(n-i+1)`` of length ``n + 4``."""
    return [ONE, ONE] + [ZERO] * i + [ONE] + [ZERO] * (n - i + 1)


def build_maxsat_gadget(phi: Cnf) -> MaxSatGadget:
    n, k = phi.clause_count, phi.variable_count
    if n < 1 or k < 1:
        raise InputError("formula needs at least one clause and one variable")
    lam = k + n * (n + 4)
    sets = literal_sets(phi, k)
    rows: list[list[int]] = [[SINK, SINK, SINK], [TRAP, TRAP, SINK]]
    labels = ["s", "t"]
    for i in range(1, n + 1):
        p1 = len(rows)
        q1 = p1 + lam
        r0 = q1 + k  # R(i,-2); R(i,j) is r0 + j + 2

        def R(j):
            return r0 + j + 2

        for j in range(lam):
            rows.append([p1, p1 + j + 1, p1])
            labels.append(f"P{i}_{j + 1}")
        for j in range(k):
            advance = q1 + j + 1 if j + 1 < k else R(-2)
            rows.append([SINK if a in sets[i - 1][j] else advance for a in (ZERO, ONE)] + [p1])
            labels.append(f"Q{i}_{j + 1}")
        for j in range(-2, n + 2):
            if j in (-2, -1, i):
                row = [R(-2), R(j + 1)]
            elif j == n + 1:
                row = [SINK, R(-2)]
            else:
                row = [R(j + 1), R(-2)]
            rows.append(row + [p1])
            labels.append(f"R{i}_{j}")
    a = Dfa.from_table(rows, state_labels=labels, letter_labels=("0", "1", "$"))
    return MaxSatGadget(phi, a, lam)


def recover_maxsat(phi: Cnf, length: int) -> int:
    """Maximum number of simultaneously satisfiable clauses, given the shortest reset length."""
    n, k = phi.clause_count, phi.variable_count
    lam = k + n * (n + 4)
    if length < 0:
        raise InputError("length must be nonnegative")
    return n - math.ceil(max(0, length - 1 - lam - k) / (n + 4))


def binarize(a: Dfa, s: int, t: int) -> Dfa:
    """Simulate a {0, 1, $} automaton over {0, 1}, two letters per original letter.

    Every state ``q`` other than ``s`` and ``t`` becomes ``(q,0), (q,1), (q,2)``;
    ``t`` becomes ``(t,0), (t,1)``; ``s`` stays a single absorbing state.
    """
    if a.letter_count != 3:
        raise InputError("binarize expects letters 0, 1 and $ (three letters)")
    if s == t:
        raise InputError("s and t must be different states")
    if any(a.delta[s][c] != s for c in range(3)):
        raise InputError(f"state {s} is not absorbing")
    others = [q for q in a.states if q not in (s, t)]
    base = {q: 3 * i for i, q in enumerate(others)}
    t0 = 3 * len(others)
    t1, sink = t0 + 1, t0 + 2

    def emb(q, x):
        if q == s:
            return sink
        if q == t:
            return t0 if x != 1 else t1  # (t, 2) does not exist; folded onto (t, 0)
        return base[q] + x

    rows: list[list[int]] = []
    labels: list[str] = []
    for q in others:
        name = a.state_name(q)
        d = a.delta[q]
        rows.append([emb(q, 1), emb(q, 2)])
        rows.append([emb(q, 1), emb(d[DOLLAR], 2)])
        rows.append([emb(d[ZERO], 0), emb(d[ONE], 0)])
        labels += [f"{name}#0", f"{name}#1", f"{name}#2"]
    rows.append([sink, t1])
    rows.append([t0, t1])
    rows.append([sink, sink])
    labels += [f"{a.state_name(t)}#0", f"{a.state_name(t)}#1", a.state_name(s)]
    return Dfa.from_table(rows, state_labels=labels)

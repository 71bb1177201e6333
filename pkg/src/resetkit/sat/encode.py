"""CNF encoding of "a reset word of length exactly k with prefix u exists".

Variable layout (all 1-based and contiguous):

* letter variables ``l(t, c)`` for positions ``t = 1..k``, one-hot per position;
* presence variables ``s(q, t)`` for ``t = 0..k``: state ``q`` may be in the image
  after ``t`` letters;
* auxiliary ladder variables for the at-most-one constraint on layer ``k``.

Letter variables come first so that lowest-index branching picks the word
left to right and unit propagation computes the image layer by layer.

Only forward implications ``s(q,t) & l(t+1,c) -> s(delta(q,c), t+1)`` are
emitted, so a model's layers over-approximate the true images; since the true
final image is nonempty and must fit in a layer with at most one member, it is a
singleton. Optional pruning clauses forbid two states at layer ``t`` whose
shortest merging word is longer than ``k - t``; every real reset word satisfies
them, so they add propagation without changing satisfiability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..automaton import Dfa, Word, pair_table
from ..cnf import Cnf
from ..errors import InputError


@dataclass(frozen=True)
class BoundedResetQuery:
    automaton: Dfa
    length: int
    prefix: Word = ()

    def __post_init__(self):
        if self.length < 0:
            raise InputError("target length must be nonnegative")
        if len(self.prefix) > self.length:
            raise InputError(f"prefix of length {len(self.prefix)} exceeds target length {self.length}")
        for c in self.prefix:
            if not 0 <= c < self.automaton.letter_count:
                raise InputError(f"prefix letter {c} out of range")


@dataclass(frozen=True)
class EncodedQuery:
    cnf: Cnf
    state_count: int
    letter_count: int
    length: int

    def letter_var(self, t: int, c: int) -> int:
        """Variable of "letter ``c`` at position ``t``" (1 <= t <= k)."""
        return (t - 1) * self.letter_count + c + 1

    def state_var(self, q: int, t: int) -> int:
        """Variable of "state ``q`` may be present after ``t`` letters"."""
        return self.length * self.letter_count + t * self.state_count + q + 1

    def decode(self, model: Mapping[int, bool]) -> Word:
        word = []
        for t in range(1, self.length + 1):
            chosen = [c for c in range(self.letter_count) if model[self.letter_var(t, c)]]
            if len(chosen) != 1:
                raise InputError(f"model is not one-hot at position {t}")
            word.append(chosen[0])
        return tuple(word)


def _at_most_one_ladder(xs: Sequence[int], next_var: int, clauses: list) -> int:
    """Sequential at-most-one over ``xs``; returns the next free variable."""
    n = len(xs)
    if n <= 1:
        return next_var
    r = list(range(next_var, next_var + n - 1))
    clauses.append((-xs[0], r[0]))
    for i in range(1, n - 1):
        clauses.append((-xs[i], r[i]))
        clauses.append((-r[i - 1], r[i]))
        clauses.append((-xs[i], -r[i - 1]))
    clauses.append((-xs[n - 1], -r[n - 2]))
    return next_var + n - 1


def encode_short_reset(query: BoundedResetQuery, prune: bool = True) -> EncodedQuery:
    a, k = query.automaton, query.length
    n, m = a.state_count, a.letter_count
    enc = EncodedQuery(Cnf(0, ()), n, m, k)
    L, S = enc.letter_var, enc.state_var
    clauses: list[tuple[int, ...]] = []

    for t in range(1, k + 1):
        clauses.append(tuple(L(t, c) for c in range(m)))
        for c in range(m):
            for d in range(c + 1, m):
                clauses.append((-L(t, c), -L(t, d)))
    for i, c in enumerate(query.prefix):
        clauses.append((L(i + 1, c),))
    for q in range(n):
        clauses.append((S(q, 0),))
    delta = a.delta
    for t in range(k):
        for c in range(m):
            lit = -L(t + 1, c)
            for q in range(n):
                clauses.append((-S(q, t), lit, S(delta[q][c], t + 1)))

    if prune and n > 1:
        dist, _ = pair_table(a)
        for t in range(k):
            budget = k - t
            for p in range(n):
                row = dist[p]
                for q in range(p + 1, n):
                    d = row[q]
                    if d < 0 or d > budget:
                        clauses.append((-S(p, t), -S(q, t)))

    next_var = S(n - 1, k) + 1
    next_var = _at_most_one_ladder([S(q, k) for q in range(n)], next_var, clauses)
    cnf = Cnf(next_var - 1, tuple(clauses))
    return EncodedQuery(cnf, n, m, k)

"""Polynomial-time reset words by repeated pair merging.

Pair-merge distances and first letters come from one backward BFS over state
pairs (O(n^2 m)); each round then merges the closest pair of the current image.
Words are valid but usually not shortest.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .automaton import Dfa, Word, is_synchronizing, pair_table


def greedy_completion(a: Dfa, states: Iterable[int]) -> Word | None:
    """Word sending every state of ``states`` to one state, or None if impossible."""
    dist, nxt = pair_table(a)
    delta = a.delta
    current = sorted(set(states))
    word: list[int] = []
    while len(current) > 1:
        idx = np.asarray(current)
        sub = dist[np.ix_(idx, idx)].astype(np.int64)
        if (sub < 0).any():
            return None
        # only pairs p < q; the diagonal and lower triangle are masked out
        sub[np.tril_indices(len(idx))] = np.iinfo(np.int64).max
        flat = int(np.argmin(sub))  # row-major argmin = lexicographically smallest tie
        p, q = current[flat // len(idx)], current[flat % len(idx)]
        while p != q:
            c = int(nxt[p, q])
            word.append(c)
            p, q = delta[p][c], delta[q][c]
            current = sorted({delta[r][c] for r in current})
    return tuple(word)


def greedy_reset_word(a: Dfa) -> Word | None:
    if not is_synchronizing(a):
        return None
    return greedy_completion(a, a.states)

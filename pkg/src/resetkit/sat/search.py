"""Decision and search procedures on top of an NP oracle."""

from __future__ import annotations

from ..automaton import Dfa, Word, cubic_bound, is_synchronizing
from ..errors import InputError, OracleInconsistency
from .oracle import Oracle


def has_reset_word_of_length(a: Dfa, k: int, oracle: Oracle | None = None) -> bool:
    """SHORT-RESET-WORD: is there a reset word of length exactly ``k``?

    ``k`` may be arbitrarily large; the oracle clamps it to (n^3 - n)/6 because
    reset words stay reset words under padding.
    """
    if k < 0:
        raise InputError("length must be nonnegative")
    if not is_synchronizing(a):
        return False
    oracle = oracle or Oracle()
    return oracle.has_reset_word(a, min(k, cubic_bound(a.state_count)))


def is_shortest_length(a: Dfa, k: int, oracle: Oracle | None = None) -> bool:
    """SHORTEST-RESET-WORD as SHORT(k) and not SHORT(k - 1)."""
    if k < 0:
        raise InputError("length must be nonnegative")
    if k == 0:
        return a.state_count == 1
    oracle = oracle or Oracle()
    return has_reset_word_of_length(a, k, oracle) and not has_reset_word_of_length(a, k - 1, oracle)


def shortest_length_via_oracle(a: Dfa, oracle: Oracle | None = None) -> tuple[int, int] | None:
    """Binary search for the shortest reset length; returns ``(length, queries)``.

    ``low`` always has no reset word, ``high`` always has one.
    """
    if not is_synchronizing(a):
        return None
    oracle = oracle or Oracle()
    before = oracle.queries
    low, high = -1, cubic_bound(a.state_count)
    while high - low > 1:
        k = -(-(low + high) // 2)
        if oracle.has_reset_word(a, k):
            high = k
        else:
            low = k
    return high, oracle.queries - before


def shortest_word_via_oracle(a: Dfa, oracle: Oracle | None = None) -> Word | None:
    """Shortest reset word built one letter at a time from prefix queries."""
    oracle = oracle or Oracle()
    found = shortest_length_via_oracle(a, oracle)
    if found is None:
        return None
    length = found[0]
    word: list[int] = []
    while len(word) < length:
        for c in a.letters:
            if oracle.has_reset_word(a, length, word + [c]):
                word.append(c)
                break
        else:
            raise OracleInconsistency(f"no letter extends prefix {word} to a reset word of length {length}")
    return tuple(word)

"""Deterministic automata, words, images and the plain-text DFA format.

States and letters are dense 0-based indices. A word is any sequence of letter
indices; the empty sequence is the empty word.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateTransitionError,
    IncompleteTableError,
    IndexRangeError,
    InputError,
    MalformedHeaderError,
    ParseError,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class Dfa:
    """Total DFA with ``delta[q][c]`` the successor of state ``q`` on letter ``c``."""

    state_count: int
    letter_count: int
    delta: tuple[tuple[int, ...], ...]
    state_labels: tuple[str | None, ...] | None = None
    letter_labels: tuple[str | None, ...] | None = None

    def __post_init__(self):
        n, m = self.state_count, self.letter_count
        if n < 1 or m < 1:
            raise InputError(f"need at least one state and one letter, got n={n} m={m}")
        if len(self.delta) != n or any(len(row) != m for row in self.delta):
            raise InputError("transition table must be n x m")
        for q, row in enumerate(self.delta):
            for c, r in enumerate(row):
                if not 0 <= r < n:
                    raise InputError(f"delta[{q}][{c}] = {r} is not a state")
        for labels, size in ((self.state_labels, n), (self.letter_labels, m)):
            if labels is not None and len(labels) != size:
                raise InputError("label tuple has the wrong length")

    @classmethod
    def from_table(cls, table, state_labels=None, letter_labels=None) -> "Dfa":
        rows = tuple(tuple(int(x) for x in row) for row in table)
        if not rows:
            raise InputError("automaton needs at least one state")
        return cls(
            len(rows),
            len(rows[0]),
            rows,
            tuple(state_labels) if state_labels is not None else None,
            tuple(letter_labels) if letter_labels is not None else None,
        )

    @functools.cached_property
    def table(self) -> np.ndarray:
        """Read-only ``int32`` array view of ``delta`` for the search kernels."""
        arr = np.asarray(self.delta, dtype=np.int32).reshape(self.state_count, self.letter_count)
        arr.setflags(write=False)
        return arr

    @property
    def states(self) -> range:
        return range(self.state_count)

    @property
    def letters(self) -> range:
        return range(self.letter_count)

    def full_set(self) -> "StateSet":
        return StateSet(self.state_count, (1 << self.state_count) - 1)

    def state_name(self, q: int) -> str:
        if self.state_labels and self.state_labels[q] is not None:
            return self.state_labels[q]
        return str(q)


@dataclass(frozen=True)
class StateSet:
    """Subset of ``0..capacity-1`` stored as an integer bitmask."""

    capacity: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.capacity:
            raise InputError(f"state set has members outside 0..{self.capacity - 1}")

    @classmethod
    def of(cls, capacity: int, members: Iterable[int]) -> "StateSet":
        bits = 0
        for q in members:
            if not 0 <= q < capacity:
                raise InputError(f"state {q} outside 0..{capacity - 1}")
            bits |= 1 << q
        return cls(capacity, bits)

    def __iter__(self):
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, q) -> bool:
        return 0 <= q < self.capacity and bool(self.bits >> q & 1)

    def __repr__(self) -> str:
        return f"StateSet({sorted(self)})"


def _check_state(a: Dfa, q: int) -> None:
    if not 0 <= q < a.state_count:
        raise InputError(f"state {q} out of range 0..{a.state_count - 1}")


def _check_word(a: Dfa, w: Sequence[int]) -> None:
    for c in w:
        if not 0 <= c < a.letter_count:
            raise InputError(f"letter {c} out of range 0..{a.letter_count - 1}")


def step(a: Dfa, q: int, c: int) -> int:
    _check_state(a, q)
    _check_word(a, (c,))
    return a.delta[q][c]


def run(a: Dfa, q: int, w: Sequence[int]) -> int:
    """Extended transition function: fold ``step`` over ``w`` from ``q``."""
    _check_state(a, q)
    _check_word(a, w)
    delta = a.delta
    for c in w:
        q = delta[q][c]
    return q


def image(a: Dfa, s: StateSet, w: Sequence[int]) -> StateSet:
    if s.capacity != a.state_count:
        raise InputError("state set belongs to an automaton of a different size")
    if not s.bits:
        raise InputError("image of the empty set is undefined")
    _check_word(a, w)
    current = set(s)
    delta = a.delta
    for c in w:
        current = {delta[q][c] for q in current}
    return StateSet.of(a.state_count, current)


def image_size(a: Dfa, w: Sequence[int]) -> int:
    return len(image(a, a.full_set(), w))


def is_reset_word(a: Dfa, w: Sequence[int]) -> bool:
    return image_size(a, w) == 1


@functools.lru_cache(maxsize=256)
def pair_table(a: Dfa):
    """Backward pair-BFS result ``(dist, next_letter)`` for ``a``; cached per automaton.

    ``dist[p, q]`` is the length of a shortest word merging ``p`` and ``q`` (-1 if
    none exists); ``next_letter[p, q]`` is the first letter of such a word.
    """
    from .kernels import pair_distances

    dist, nxt = pair_distances(a.table)
    dist.setflags(write=False)
    nxt.setflags(write=False)
    return dist, nxt


def is_synchronizing(a: Dfa) -> bool:
    """Every pair of states can be merged (Cerny's pairwise criterion)."""
    if a.state_count == 1:
        return True
    dist, _ = pair_table(a)
    return bool((dist >= 0).all())


def merging_word(a: Dfa, p: int, q: int) -> Word | None:
    """A shortest word sending ``p`` and ``q`` to the same state."""
    dist, nxt = pair_table(a)
    if dist[p, q] < 0:
        return None
    word = []
    delta = a.delta
    while p != q:
        c = int(nxt[p, q])
        word.append(c)
        p, q = delta[p][c], delta[q][c]
    return tuple(word)


def cerny_automaton(n: int) -> Dfa:
    """Cerny automaton C_n: letter 0 rotates, letter 1 merges ``n-1`` into ``0``."""
    if n < 2:
        raise InputError("Cerny automaton needs n >= 2")
    rows = [((q + 1) % n, 0 if q == n - 1 else q) for q in range(n)]
    return Dfa.from_table(rows)


def cubic_bound(n: int) -> int:
    """Best proven upper bound (n^3 - n) / 6 on shortest reset length."""
    return (n ** 3 - n) // 6


# --- text format -----------------------------------------------------------


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"bad word {text!r}: expected comma-separated letter indices") from None


def format_word(w: Sequence[int]) -> str:
    return ",".join(str(c) for c in w)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_dfa_with_meta(text: str) -> tuple[Dfa, dict[str, str]]:
    """Parse the DFA text format, also returning ``meta <key> <value>`` trailer lines."""
    lines = text.splitlines()
    header = None
    table: dict[tuple[int, int], int] = {}
    state_labels: dict[int, str] = {}
    letter_labels: dict[int, str] = {}
    meta: dict[str, str] = {}
    n = m = 0
    last = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "dfa":
                raise MalformedHeaderError("header must be 'dfa <n> <m>'", lineno)
            n, m = _int(parts[1], lineno), _int(parts[2], lineno)
            if n < 1 or m < 1:
                raise MalformedHeaderError("state and letter counts must be positive", lineno)
            header = lineno
            continue
        parts = line.split(None, 2)
        kind = parts[0]
        if kind in ("statename", "lettername"):
            if len(parts) < 3:
                raise ParseError(f"{kind} needs an index and a name", lineno)
            idx = _int(parts[1], lineno)
            bound = n if kind == "statename" else m
            if not 0 <= idx < bound:
                raise IndexRangeError(f"{kind} index {idx} out of range", lineno)
            (state_labels if kind == "statename" else letter_labels)[idx] = parts[2]
            continue
        if kind == "meta":
            if len(parts) < 2:
                raise ParseError("meta needs a key", lineno)
            meta[parts[1]] = parts[2] if len(parts) > 2 else ""
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected '<q> <c> <q'>', got {line!r}", lineno)
        q, c, r = (_int(tok, lineno) for tok in parts)
        if not 0 <= q < n or not 0 <= r < n:
            raise IndexRangeError(f"state index out of range 0..{n - 1}", lineno)
        if not 0 <= c < m:
            raise IndexRangeError(f"letter index {c} out of range 0..{m - 1}", lineno)
        if (q, c) in table:
            raise DuplicateTransitionError(f"transition ({q}, {c}) given twice", lineno)
        table[(q, c)] = r
    if header is None:
        raise MalformedHeaderError("missing 'dfa <n> <m>' header", 1)
    if len(table) != n * m:
        missing = next((q, c) for q in range(n) for c in range(m) if (q, c) not in table)
        raise IncompleteTableError(
            f"incomplete transition table: {n * m - len(table)} missing, first is {missing}", last
        )
    rows = [[table[(q, c)] for c in range(m)] for q in range(n)]
    sl = tuple(state_labels.get(q) for q in range(n)) if state_labels else None
    ll = tuple(letter_labels.get(c) for c in range(m)) if letter_labels else None
    return Dfa.from_table(rows, sl, ll), meta


def parse_dfa(text: str) -> Dfa:
    return parse_dfa_with_meta(text)[0]


def serialize_dfa(a: Dfa, meta: dict[str, object] | None = None) -> str:
    out = [f"dfa {a.state_count} {a.letter_count}"]
    for q in a.states:
        for c in a.letters:
            out.append(f"{q} {c} {a.delta[q][c]}")
    if a.state_labels:
        out += [f"statename {q} {name}" for q, name in enumerate(a.state_labels) if name is not None]
    if a.letter_labels:
        out += [f"lettername {c} {name}" for c, name in enumerate(a.letter_labels) if name is not None]
    if meta:
        out += [f"meta {key} {value}" for key, value in meta.items()]
    return "\n".join(out) + "\n"

"""FSAT to "reset word of a given length" via the chain gadget with no Q-chains.

The target length is ``K = k + 2``. The guard chain forces every length-K reset
word to start with ``01``, after which letter ``j + 2`` is the value of X_j; so
length-K reset words and satisfying assignments are in bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..automaton import Dfa, Word
from ..cnf import Assignment, Cnf
from ..errors import InputError
from .satunsat import ChainGadget, _build_chains, literal_sets


@dataclass(frozen=True)
class FsatGadget:
    phi: Cnf
    chains: ChainGadget
    target_length: int
    decode_positions: tuple[int, ...]  # 0-based word position of X_1..X_k

    @property
    def automaton(self) -> Dfa:
        return self.chains.automaton

    def encode_assignment(self, alpha: Assignment) -> Word:
        word = [0] * self.target_length
        word[0], word[1] = 0, 1
        for j, pos in enumerate(self.decode_positions, 1):
            word[pos] = int(alpha[j])
        return tuple(word)

    def meta(self) -> dict[str, object]:
        return {"kind": "fsat", "K": self.target_length, "k": self.phi.variable_count,
                "n": self.phi.clause_count, "decode": ",".join(map(str, self.decode_positions))}


def build_fsat_gadget(phi: Cnf) -> FsatGadget:
    if not phi.clauses:
        raise InputError("formula needs at least one clause")
    k = phi.variable_count
    chains = _build_chains(literal_sets(phi, k), [], k)
    return FsatGadget(phi, chains, k + 2, tuple(range(2, k + 2)))


def decode_fsat(g: FsatGadget, w: Sequence[int]) -> Assignment:
    """Assignment read off ``w``; words of the wrong length map to all-false."""
    k = g.phi.variable_count
    if len(w) != g.target_length:
        return {j: False for j in range(1, k + 1)}
    return {j: w[pos] == 1 for j, pos in enumerate(g.decode_positions, 1)}

"""CNF formulas, assignments and DIMACS I/O."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InputError, ParseError

Assignment = dict[int, bool]


@dataclass(frozen=True)
class Cnf:
    """Conjunction of clauses over variables ``1..variable_count``.

    Literals are nonzero integers: ``j`` is X_j and ``-j`` is its negation.
    Empty clauses are rejected unless ``allow_empty_clause`` is set.
    """

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]
    allow_empty_clause: bool = False

    def __post_init__(self):
        if self.variable_count < 0:
            raise InputError("variable count must be nonnegative")
        for clause in self.clauses:
            if not clause and not self.allow_empty_clause:
                raise InputError("empty clause (pass allow_empty_clause=True for unsat fixtures)")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise InputError(f"literal {lit} outside 1..{self.variable_count}")

    @classmethod
    def of(cls, clauses: Iterable[Iterable[int]], variable_count: int | None = None) -> "Cnf":
        cl = tuple(tuple(int(x) for x in c) for c in clauses)
        if variable_count is None:
            variable_count = max((abs(x) for c in cl for x in c), default=0)
        return cls(variable_count, cl, any(not c for c in cl))

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def __str__(self) -> str:
        def lit(x):
            return f"x{x}" if x > 0 else f"~x{-x}"

        return " & ".join("(" + " | ".join(lit(x) for x in c) + ")" for c in self.clauses) or "T"


def clause_satisfied(clause: Iterable[int], alpha: Mapping[int, bool]) -> bool:
    return any(alpha[abs(x)] == (x > 0) for x in clause)


def satisfied_count(f: Cnf, alpha: Mapping[int, bool]) -> int:
    return sum(clause_satisfied(c, alpha) for c in f.clauses)


def satisfies(f: Cnf, alpha: Mapping[int, bool]) -> bool:
    return all(clause_satisfied(c, alpha) for c in f.clauses)


def parse_dimacs(text: str) -> Cnf:
    """Read DIMACS CNF: ``c`` comments, a ``p cnf <vars> <clauses>`` header and
    zero-terminated clauses that may span lines."""
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("header must be 'p cnf <vars> <clauses>'", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("non-integer in DIMACS header", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds declared variable count {header[0]}", lineno)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        clauses.append(tuple(current))
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return Cnf(header[0], tuple(clauses), any(not c for c in clauses))


def to_dimacs(f: Cnf, comments: Iterable[str] = ()) -> str:
    out = [f"c {line}" for line in comments]
    out.append(f"p cnf {f.variable_count} {len(f.clauses)}")
    out += [" ".join(map(str, c + (0,))) for c in f.clauses]
    return "\n".join(out) + "\n"

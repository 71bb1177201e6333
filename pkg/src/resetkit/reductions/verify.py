"""Per-instance verification of the reduction gadgets.

Every verifier returns a :class:`Report` made of claims. A claim is ``PASS``,
``FAIL`` or ``SKIP``; ``SKIP`` is reserved for checks that could not run because
a brute-force cap or a search budget was exceeded, and it never counts as a pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..automaton import Dfa, is_reset_word
from ..cnf import Cnf, satisfies
from ..errors import BudgetExceeded, InputError
from ..exact import (
    DEFAULT_BRUTE_CAP,
    DEFAULT_SUBSET_BUDGET,
    brute_sat,
    count_reset_words,
    count_sat,
    max_sat_assignment,
    reset_words_of_length,
    shortest_reset_length,
)
from ..sat.oracle import Oracle
from ..sat.search import shortest_length_via_oracle
from .fsat import build_fsat_gadget, decode_fsat
from .maxsat import build_maxsat_gadget, recover_maxsat
from .satunsat import build_sat_unsat_gadget

METHODS = ("auto", "bfs", "sat")
PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True)
class Claim:
    ident: str
    status: str
    details: str = ""

    def render(self) -> str:
        return f"CLAIM {self.ident} {self.status} {self.details}".rstrip()


@dataclass
class Report:
    name: str
    claims: list[Claim] = field(default_factory=list)
    numbers: dict[str, object] = field(default_factory=dict)

    def add(self, ident: str, ok: bool | None, details: str = "") -> None:
        status = SKIP if ok is None else (PASS if ok else FAIL)
        self.claims.append(Claim(ident, status, details))

    def skip(self, ident: str, reason: str) -> None:
        self.claims.append(Claim(ident, SKIP, reason))

    @property
    def result(self) -> str:
        statuses = {c.status for c in self.claims}
        if FAIL in statuses:
            return FAIL
        if SKIP in statuses or not self.claims:
            return SKIP
        return PASS

    @property
    def passed(self) -> bool:
        return self.result == PASS

    def claim(self, ident: str) -> Claim:
        for c in self.claims:
            if c.ident == ident:
                return c
        raise KeyError(ident)

    def render(self) -> str:
        lines = [c.render() for c in self.claims]
        lines.append(f"RESULT {self.result}")
        return "\n".join(lines) + "\n"


class _Skip(Exception):
    pass


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def _guard_cap(f: Cnf, cap: int) -> None:
    if f.variable_count > cap:
        raise _Skip(f"brute-force cap exceeded: {f.variable_count} variables > {cap}")


def _length_probe(a: Dfa, method: str, budget: int, oracle: Oracle | None) -> tuple[Callable[[int], bool], str]:
    """Return ``has(k)`` ("some reset word of length exactly k") and the path used."""
    if method in ("auto", "bfs"):
        try:
            shortest = shortest_reset_length(a, budget)
        except BudgetExceeded:
            if method == "bfs":
                raise _Skip(f"subset budget {budget} exceeded") from None
        else:
            return (lambda k: shortest is not None and k >= shortest), "bfs"
    oracle = oracle or Oracle()
    return (lambda k: oracle.has_reset_word(a, k)), "sat"


def _shortest(a: Dfa, method: str, budget: int, oracle: Oracle | None) -> tuple[int | None, str]:
    if method in ("auto", "bfs"):
        try:
            return shortest_reset_length(a, budget), "bfs"
        except BudgetExceeded:
            if method == "bfs":
                raise _Skip(f"subset budget {budget} exceeded") from None
    found = shortest_length_via_oracle(a, oracle or Oracle())
    return (None if found is None else found[0]), "sat"


def _run(report: Report, body: Callable[[], None], idents: tuple[str, ...]) -> Report:
    try:
        body()
    except (_Skip, BudgetExceeded) as exc:
        reason = str(exc) or type(exc).__name__
        done = {c.ident for c in report.claims}
        for ident in idents:
            if ident not in done:
                report.skip(ident, reason)
    return report


def verify_sat_unsat(phi: Cnf, psi: Cnf, method: str = "auto", *, cap: int = DEFAULT_BRUTE_CAP,
                     budget: int = DEFAULT_SUBSET_BUDGET, oracle: Oracle | None = None) -> Report:
    """Check the three length claims of the SAT-UNSAT gadget on one pair."""
    _check_method(method)
    report = Report("satunsat")

    def body():
        g = build_sat_unsat_gadget(phi, psi)
        _guard_cap(g.phi, cap)
        k = g.k
        phi_sat = brute_sat(g.phi, cap) is not None
        psi_sat = brute_sat(g.psi, cap) is not None
        cls = "sat-sat" if phi_sat and psi_sat else ("sat-unsat" if phi_sat else "unsat")
        has, path = _length_probe(g.automaton, method, budget, oracle)
        if path == "bfs":
            shortest = shortest_reset_length(g.automaton, budget)
            shown = "none" if shortest is None else str(shortest)
        else:
            probes = [has(k + 1), has(k + 2), has(k + 3)]
            shortest = next((k + 1 + i for i, ok in enumerate(probes) if ok), None)
            shown = str(shortest) if shortest is not None else f">={k + 4}"
            if probes[0]:
                shown = f"<={k + 1}"
        ge4 = shortest is None or shortest >= k + 4
        report.numbers.update(k=k, shortest=shortest, classification=cls, method=path)
        info = f"k={k} class={cls} shortest={shown} method={path}"
        report.add("sat-sat", (shortest == k + 2) == (cls == "sat-sat"), info)
        report.add("sat-unsat", (shortest == k + 3) == (cls == "sat-unsat"), info)
        report.add("unsat-phi", ge4 == (cls == "unsat"), info)

    return _run(report, body, ("sat-sat", "sat-unsat", "unsat-phi"))


def verify_fsat(phi: Cnf, method: str = "auto", *, cap: int = DEFAULT_BRUTE_CAP,
                budget: int = DEFAULT_SUBSET_BUDGET, oracle: Oracle | None = None) -> Report:
    """Existence, decode validity and emptiness claims of the FSAT gadget."""
    _check_method(method)
    report = Report("fsat")
    idents = ("exists", "decode", "none")

    def body():
        _guard_cap(phi, cap)
        g = build_fsat_gadget(phi)
        a, K = g.automaton, g.target_length
        sat = brute_sat(phi, cap) is not None
        words = None
        path = "sat" if method == "sat" else "bfs"
        if path == "bfs":
            try:
                words = reset_words_of_length(a, K, limit=1 << phi.variable_count, budget=budget)
            except BudgetExceeded:
                if method == "bfs":
                    raise _Skip("reset-word enumeration budget exceeded") from None
                path = "sat"
        if words is None:
            found = (oracle or Oracle()).find_reset_word(a, K)
            words = [] if found is None else [found]
        report.numbers.update(K=K, satisfiable=sat, words=len(words), method=path)
        head = f"K={K} satisfiable={str(sat).lower()} method={path}"
        if sat:
            report.add("exists", bool(words), f"{head} words={len(words)}")
        else:
            report.add("exists", True, f"{head} vacuous")
        bad = [w for w in words if not (is_reset_word(a, w) and satisfies(phi, decode_fsat(g, w)))]
        report.add("decode", not bad, f"{head} checked={len(words)} bad={len(bad)}")
        if sat:
            report.add("none", True, f"{head} vacuous")
        else:
            report.add("none", not words, f"{head} " + ("no reset word at K" if not words else "reset word found"))

    return _run(report, body, idents)


def verify_parsimony(phi: Cnf, *, cap: int = DEFAULT_BRUTE_CAP, budget: int = DEFAULT_SUBSET_BUDGET) -> Report:
    """Compare the number of length-K reset words of the FSAT gadget with #SAT."""
    report = Report("parsimony")

    def body():
        _guard_cap(phi, cap)
        g = build_fsat_gadget(phi)
        words = count_reset_words(g.automaton, g.target_length, budget)
        models = count_sat(phi, cap)
        report.numbers.update(K=g.target_length, reset_words=words, models=models)
        report.add("count", words == models, f"K={g.target_length} reset_words={words} models={models}")

    return _run(report, body, ("count",))


def verify_maxsat(phi: Cnf, method: str = "auto", *, cap: int = DEFAULT_BRUTE_CAP,
                  budget: int = DEFAULT_SUBSET_BUDGET, oracle: Oracle | None = None) -> Report:
    """Length equivalence, recovery formula and witness word of the MAX-SAT gadget.

    The ``length`` claim checks, for every ``m`` in ``0..n``, that a reset word of
    length ``1 + lam + k + m(n+4)`` exists exactly when some assignment leaves at
    most ``m`` clauses unsatisfied. Since reset words stay reset words when
    padded, "exists at length L" is "shortest <= L". Satisfiable formulas may
    reset strictly earlier than ``1 + lam + k``; that is allowed.
    """
    _check_method(method)
    report = Report("maxsat")
    idents = ("length", "recover", "witness")

    def body():
        _guard_cap(phi, cap)
        g = build_maxsat_gadget(phi)
        best, alpha = max_sat_assignment(phi, cap)
        m_min = phi.clause_count - best
        expected = g.length_for(m_min)
        shortest, path = _shortest(g.automaton, method, budget, oracle)
        recovered = None if shortest is None else recover_maxsat(phi, shortest)
        report.numbers.update(l=shortest, expected=expected, recovered=recovered, max_sat=best, method=path)
        head = f"n={g.n} k={g.k} lambda={g.lam} method={path}"
        bad = [m for m in range(g.n + 1)
               if (shortest is not None and shortest <= g.length_for(m)) != (m >= m_min)]
        report.add("length", not bad, f"{head} l={shortest} L(m*)={expected} m*={m_min} mismatched_m={bad or 'none'}")
        report.add("recover", recovered == best, f"recovered={recovered} max_sat={best}")
        w = g.witness(alpha)
        report.add("witness", len(w) == expected and is_reset_word(g.automaton, w), f"witness_length={len(w)}")

    return _run(report, body, idents)

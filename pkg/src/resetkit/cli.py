"""The ``resetkit`` command.

Exit codes: 0 and 1 carry yes/no answers, 2 means a usage or parse error, 3 a
search budget was exceeded and 10 the SAT oracle failed. Results go to stdout,
diagnostics to stderr. A file argument of ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .automaton import cerny_automaton, format_word, is_synchronizing, parse_dfa_with_meta, serialize_dfa
from .cnf import parse_dimacs
from .errors import BudgetExceeded, InputError, OracleFailure, OracleInconsistency, ResetKitError
from .exact import DEFAULT_SUBSET_BUDGET, count_reset_words, shortest_reset_length, shortest_reset_word
from .greedy import greedy_reset_word
from .reductions import (
    binarize,
    build_fsat_gadget,
    build_maxsat_gadget,
    build_sat_unsat_gadget,
    verify_fsat,
    verify_maxsat,
    verify_parsimony,
    verify_sat_unsat,
)
from .sat import Oracle, has_reset_word_of_length, is_shortest_length, shortest_length_via_oracle, shortest_word_via_oracle

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET, EXIT_ORACLE = 0, 1, 2, 3, 10


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Usage(f"cannot write {path}: {exc.strerror}") from None


def _dfa(path: str):
    return parse_dfa_with_meta(_read(path))


def _cnf(path: str):
    return parse_dimacs(_read(path))


def _oracle(args) -> Oracle:
    return Oracle.from_environment(getattr(args, "sat_solver", None),
                                   max_conflicts=getattr(args, "max_conflicts", -1))


def cmd_check(args) -> int:
    a, _ = _dfa(args.dfa)
    ok = is_synchronizing(a)
    print("SYNCHRONIZING" if ok else "NOT-SYNCHRONIZING")
    return EXIT_OK if ok else EXIT_NO


def cmd_length(args) -> int:
    a, _ = _dfa(args.dfa)
    if args.method == "sat":
        found = shortest_length_via_oracle(a, _oracle(args))
        if found is None:
            print("NONE")
        else:
            print(found[0])
            print(f"queries={found[1]}")
        return EXIT_OK
    length = shortest_reset_length(a, args.budget)
    print("NONE" if length is None else length)
    return EXIT_OK


def cmd_solve(args) -> int:
    a, _ = _dfa(args.dfa)
    if args.method == "sat":
        word = shortest_word_via_oracle(a, _oracle(args))
    elif args.method == "greedy":
        word = greedy_reset_word(a)
    else:
        word = shortest_reset_word(a, args.budget)
    print("NONE" if word is None else format_word(word))
    return EXIT_OK


def cmd_decide(args) -> int:
    a, _ = _dfa(args.dfa)
    k = args.k
    if args.method == "sat":
        oracle = _oracle(args)
        answer = is_shortest_length(a, k, oracle) if args.shortest else has_reset_word_of_length(a, k, oracle)
    else:
        length = shortest_reset_length(a, args.budget)
        answer = length is not None and (length == k if args.shortest else length <= k)
    print("YES" if answer else "NO")
    return EXIT_OK if answer else EXIT_NO


def cmd_count(args) -> int:
    a, _ = _dfa(args.dfa)
    print(count_reset_words(a, args.k, args.budget))
    return EXIT_OK


def cmd_reduce(args) -> int:
    kind, inputs = args.kind, args.inputs
    arity = {"satunsat": 2, "fsat": 1, "maxsat": 1, "binarize": 1}[kind]
    if len(inputs) != arity:
        raise _Usage(f"reduce {kind} takes {arity} input file(s), got {len(inputs)}")
    if kind == "satunsat":
        g = build_sat_unsat_gadget(_cnf(inputs[0]), _cnf(inputs[1]))
        text = serialize_dfa(g.automaton, g.meta())
    elif kind == "fsat":
        g = build_fsat_gadget(_cnf(inputs[0]))
        text = serialize_dfa(g.automaton, g.meta())
    elif kind == "maxsat":
        g = build_maxsat_gadget(_cnf(inputs[0]))
        text = serialize_dfa(g.automaton, g.meta())
    else:
        a, meta = _dfa(inputs[0])
        s = _meta_int(meta, "s", args.s)
        t = _meta_int(meta, "t", args.t)
        b = binarize(a, s, t)
        out_meta = {"kind": "binarized"}
        if "lambda" in meta:
            out_meta.update({key: meta[key] for key in ("n", "k", "lambda") if key in meta})
        text = serialize_dfa(b, out_meta)
    _write(args.output, text)
    return EXIT_OK


def _meta_int(meta: dict[str, str], key: str, override: int | None) -> int:
    if override is not None:
        return override
    if key not in meta:
        raise _Usage(f"state {key} not given: pass --{key} or use an input with a 'meta {key}' line")
    try:
        return int(meta[key])
    except ValueError:
        raise InputError(f"meta {key} is not an integer: {meta[key]!r}") from None


def cmd_verify(args) -> int:
    kind, inputs = args.kind, args.inputs
    arity = 2 if kind == "satunsat" else 1
    if len(inputs) != arity:
        raise _Usage(f"verify {kind} takes {arity} CNF file(s), got {len(inputs)}")
    formulas = [_cnf(p) for p in inputs]
    oracle = _oracle(args)
    if kind == "satunsat":
        report = verify_sat_unsat(*formulas, method=args.method, budget=args.budget, oracle=oracle)
    elif kind == "fsat":
        report = verify_fsat(formulas[0], method=args.method, budget=args.budget, oracle=oracle)
    elif kind == "maxsat":
        report = verify_maxsat(formulas[0], method=args.method, budget=args.budget, oracle=oracle)
    else:
        report = verify_parsimony(formulas[0], budget=args.budget)
    sys.stdout.write(report.render())
    return EXIT_OK if report.passed else EXIT_NO


def cmd_gen(args) -> int:
    if args.n < 2:
        raise _Usage("the Cerny family needs -n >= 2")
    _write(args.output, serialize_dfa(cerny_automaton(args.n)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="resetkit", description="Reset words of synchronizing automata.")
    sub = p.add_subparsers(dest="command", required=True)

    def budget(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_SUBSET_BUDGET,
                        help="maximum number of subsets explored by BFS (default: %(default)s)")

    def solver(sp):
        sp.add_argument("--sat-solver", metavar="P", help="external DIMACS solver (overrides $RESETKIT_SAT_SOLVER)")
        sp.add_argument("--max-conflicts", type=int, default=-1, help="conflict budget of the internal solver")

    sp = sub.add_parser("check", help="is the automaton synchronizing?")
    sp.add_argument("dfa", nargs="?", default="-", help="DFA file (default: stdin)")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("length", help="shortest reset length")
    sp.add_argument("dfa", nargs="?", default="-", help="DFA file (default: stdin)")
    sp.add_argument("--method", choices=("bfs", "sat"), default="bfs")
    budget(sp)
    solver(sp)
    sp.set_defaults(func=cmd_length)

    sp = sub.add_parser("solve", help="print a reset word")
    sp.add_argument("dfa", nargs="?", default="-", help="DFA file (default: stdin)")
    sp.add_argument("--method", choices=("bfs", "sat", "greedy"), default="bfs")
    budget(sp)
    solver(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("decide", help="is there a reset word of length K?")
    sp.add_argument("dfa", nargs="?", default="-", help="DFA file (default: stdin)")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--shortest", action="store_true", help="ask whether K is the shortest length")
    sp.add_argument("--method", choices=("bfs", "sat"), default="bfs")
    budget(sp)
    solver(sp)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("count", help="number of reset words of length K")
    sp.add_argument("dfa", nargs="?", default="-", help="DFA file (default: stdin)")
    sp.add_argument("-k", type=int, required=True)
    budget(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("reduce", help="build a reduction gadget")
    sp.add_argument("kind", choices=("satunsat", "fsat", "maxsat", "binarize"))
    sp.add_argument("inputs", nargs="+")
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--s", type=int, help="absorbing state for binarize")
    sp.add_argument("--t", type=int, help="special state t for binarize")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("verify", help="check a reduction on one instance")
    sp.add_argument("kind", choices=("satunsat", "fsat", "maxsat", "parsimony"))
    sp.add_argument("inputs", nargs="+")
    sp.add_argument("--method", choices=("auto", "bfs", "sat"), default="auto")
    budget(sp)
    solver(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate a known automaton")
    sp.add_argument("family", choices=("cerny",))
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", 0) is not None and getattr(args, "k", 0) < 0:
        print("resetkit: error: -k must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (_Usage, InputError) as exc:
        print(f"resetkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"resetkit: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OracleFailure, OracleInconsistency) as exc:
        print(f"resetkit: oracle failure: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except ResetKitError as exc:
        print(f"resetkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

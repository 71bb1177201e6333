"""Reset words of synchronizing automata: exact search, SAT-oracle algorithms and reduction gadgets."""

from .automaton import (
    Dfa,
    StateSet,
    cerny_automaton,
    cubic_bound,
    format_word,
    image,
    is_reset_word,
    is_synchronizing,
    parse_dfa,
    parse_word,
    run,
    serialize_dfa,
)
from .cnf import Cnf, parse_dimacs, to_dimacs
from .errors import BudgetExceeded, InputError, OracleFailure, ParseError, ResetKitError
from .exact import count_reset_words, shortest_reset_length, shortest_reset_word
from .greedy import greedy_reset_word

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Cnf",
    "Dfa",
    "InputError",
    "OracleFailure",
    "ParseError",
    "ResetKitError",
    "StateSet",
    "cerny_automaton",
    "count_reset_words",
    "cubic_bound",
    "format_word",
    "greedy_reset_word",
    "image",
    "is_reset_word",
    "is_synchronizing",
    "parse_dfa",
    "parse_dimacs",
    "parse_word",
    "run",
    "serialize_dfa",
    "shortest_reset_length",
    "shortest_reset_word",
    "to_dimacs",
]

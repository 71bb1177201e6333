from .encode import BoundedResetQuery, EncodedQuery, encode_short_reset
from .oracle import SOLVER_ENV, Oracle, dpll_solve, external_solve, parse_solver_output
from .search import (
    has_reset_word_of_length,
    is_shortest_length,
    shortest_length_via_oracle,
    shortest_word_via_oracle,
)

__all__ = [
    "BoundedResetQuery",
    "EncodedQuery",
    "Oracle",
    "SOLVER_ENV",
    "dpll_solve",
    "encode_short_reset",
    "external_solve",
    "has_reset_word_of_length",
    "is_shortest_length",
    "parse_solver_output",
    "shortest_length_via_oracle",
    "shortest_word_via_oracle",
]

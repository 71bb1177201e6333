import pytest
from hypothesis import given
from hypothesis import strategies as st

from resetkit.cnf import Cnf, clause_satisfied, parse_dimacs, satisfied_count, satisfies, to_dimacs
from resetkit.errors import InputError, ParseError


def test_parse_basic_with_comments_and_multiline_clause():
    text = "c hello\np cnf 3 2\n1 -2\n3 0\n-1 0\n"
    f = parse_dimacs(text)
    assert f.variable_count == 3
    assert f.clauses == ((1, -2, 3), (-1,))


def test_percent_terminator():
    f = parse_dimacs("p cnf 1 1\n1 0\n%\n0\n")
    assert f.clauses == ((1,),)


def test_empty_clause_is_kept():
    f = parse_dimacs("p cnf 1 2\n1 0\n0\n")
    assert f.clauses == ((1,), ())
    assert not satisfies(f, {1: True})


@pytest.mark.parametrize("text", [
    "1 0\n",
    "p cnf 1\n1 0\n",
    "p dnf 1 1\n1 0\n",
    "p cnf 1 1\n2 0\n",
    "p cnf 1 2\n1 0\n",
    "p cnf 1 1\nx 0\n",
    "",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_parse_error_has_line_number():
    with pytest.raises(ParseError) as info:
        parse_dimacs("c a\np cnf 2 1\n1 3 0\n")
    assert info.value.line == 3


def test_cnf_validation():
    with pytest.raises(InputError):
        Cnf(1, ((2,),))
    with pytest.raises(InputError):
        Cnf(1, ((),))
    assert Cnf.of([[1, -3]]).variable_count == 3


def test_satisfaction_helpers():
    f = Cnf.of([[1, 2], [-1], [-2]])
    alpha = {1: False, 2: True}
    assert clause_satisfied((1, 2), alpha)
    assert satisfied_count(f, alpha) == 2
    assert not satisfies(f, alpha)
    assert str(Cnf.of([[1, -2]])) == "(x1 | ~x2)"


clauses = st.lists(st.lists(st.integers(1, 6).flatmap(lambda v: st.sampled_from([v, -v])), min_size=1, max_size=4),
                   max_size=8)


@given(clauses)
def test_dimacs_roundtrip(cl):
    f = Cnf(6, tuple(tuple(c) for c in cl))
    assert parse_dimacs(to_dimacs(f, comments=["generated"])) == f

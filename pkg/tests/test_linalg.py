from fractions import Fraction

import pytest

from orthoschubert.linalg import LeadingTermBasis, NotInSpanError, SingularSystemError, rank, solve_square


def test_solve():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    assert solve_square(m, [Fraction(3), Fraction(5)]) == [Fraction(4, 5), Fraction(7, 5)]


def test_overdetermined_consistent():
    m = [[1, 0], [0, 1], [1, 1]]
    assert solve_square([[Fraction(v) for v in r] for r in m], [Fraction(1), Fraction(2), Fraction(3)]) == [1, 2]


def test_singular():
    with pytest.raises(SingularSystemError):
        solve_square([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], [Fraction(1), Fraction(2)])


def test_leading_term_basis():
    b = LeadingTermBasis(order=str)
    b.add({"a": 1, "b": 1}, "u")
    b.add({"b": 1}, "v")
    assert b.express({"a": 2, "b": 5}) == {"u": 2, "v": 3}
    with pytest.raises(NotInSpanError):
        b.express({"c": 1})
    with pytest.raises(Exception):
        b.add({"a": 2, "b": 2}, "w")
    assert b.rank() == 2


def test_rank():
    assert rank([{"a": 1}, {"a": 2}, {"b": 1}], str) == 2

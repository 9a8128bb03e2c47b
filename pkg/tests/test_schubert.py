from orthoschubert.poly import Polynomial
from orthoschubert.schubert import schubert_a, stability_check, staircase
from orthoschubert.weyl import PermutationA, all_permutations

import oracles


def test_small_cases():
    assert schubert_a(PermutationA.parse("213"), 3) == Polynomial.var(1, 3)
    assert schubert_a(PermutationA.parse("321")) == staircase(3)
    assert schubert_a(PermutationA.parse("132")) == Polynomial.var(1, 3) + Polynomial.var(2, 3)


def test_against_definition():
    for n in (2, 3, 4):
        for w in all_permutations(n):
            assert dict(schubert_a(w).terms) == oracles.schubert_by_definition(w.entries)


def test_stability():
    assert stability_check(PermutationA.parse("21"), 2, 4)
    assert stability_check(PermutationA.identity(3), 3, 5)
    for w in all_permutations(3):
        assert stability_check(w, 3, 4)


def test_nonnegative_integer_coefficients():
    for w in all_permutations(4):
        assert all(c > 0 and c.denominator == 1 for c in schubert_a(w).terms.values())

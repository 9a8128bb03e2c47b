from fractions import Fraction

from orthoschubert.bgg import class_representative, dual_path_coefficients, functional, point_class, root_operator
from orthoschubert.ortho import is_in_ideal, ortho_coefficients, ortho_schubert
from orthoschubert.poly import Polynomial
from orthoschubert.weyl import SignedPermutation, all_signed_permutations, longest_element


def test_functional_normalised_on_point_class():
    for n in (2, 3):
        assert functional(point_class(n)) == 1


def test_representatives_agree_modulo_ideal():
    for w in all_signed_permutations(3):
        diff = class_representative(w) - ortho_schubert(w)
        assert not diff or is_in_ideal(diff)


def test_dual_path_matches_tableaux():
    for w in all_signed_permutations(3):
        want = {k: Fraction(c) for k, c in ortho_coefficients(w).items()}
        assert dual_path_coefficients(w) == want


def test_root_operator_braid():
    f = Polynomial.monomial((3, 1, 2))
    assert root_operator(f, (0, 2, 0)) == root_operator(f, (2, 0, 2))
    assert root_operator(f, (1, 2, 1)) == root_operator(f, (2, 1, 2))


def test_top_class_of_longest_element():
    for n in (2, 3):
        assert functional(ortho_schubert(longest_element(n))) == 1
        assert class_representative(SignedPermutation.identity(n)) == Polynomial.one(n)

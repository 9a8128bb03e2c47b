import random
from fractions import Fraction

import pytest

from orthoschubert.ortho import (
    DBasisIndex,
    NotInIdealError,
    d_basis,
    divided_difference_property,
    expand_in_d_basis,
    ideal_decompose,
    is_in_ideal,
    ortho_coefficients,
    ortho_schubert,
    restrict,
    structure_constants,
)
from orthoschubert.poly import Polynomial, PolynomialError
from orthoschubert.schubert import schubert_a
from orthoschubert.symfun import Partition, elementary, elementary_squares, ptilde_x
from orthoschubert.weyl import PermutationA, SignedPermutation, all_signed_permutations

S = SignedPermutation.parse
P = PermutationA.parse
x = Polynomial.var
half = Fraction(1, 2)


def idx(lam, pi):
    return DBasisIndex(Partition(tuple(lam)), P(pi))


def test_d_basis_examples():
    assert d_basis((), P("123"), 3) == Polynomial.one(3)
    assert d_basis((1,), P("123"), 3) == (x(1, 3) + x(2, 3) + x(3, 3)).scale(half)
    assert d_basis((2,), P("213"), 3) == -(ptilde_x(Partition((2,)), 3) * x(1, 3))


def test_d_basis_rejects_large_part():
    with pytest.raises(PolynomialError):
        d_basis((4,), P("123"), 3)


def test_ortho_schubert_examples():
    assert ortho_schubert(S("2,1,3")) == (-x(1, 3) + x(2, 3) + x(3, 3)).scale(half)
    assert ortho_schubert(S("1,3,2")) == x(3, 3)
    assert ortho_schubert(S("-3,-1,2")) == ptilde_x(Partition((2,)), 3)
    assert ortho_schubert(SignedPermutation.identity(3)) == Polynomial.one(3)


def test_simple_reflections_general_n():
    # D_{s_i} = x_{i+1} + ... + x_n for i >= 2 and D_{s_1} = (-x_1 + x_2 + ... + x_n)/2
    for n in (3, 4):
        for i in range(2, n):
            e = list(range(1, n + 1))
            e[i - 1], e[i] = e[i], e[i - 1]
            want = sum((x(k, n) for k in range(i + 1, n + 1)), Polynomial.zero(n))
            assert ortho_schubert(SignedPermutation(tuple(e))) == want


def test_homogeneous_of_length_degree():
    for w in all_signed_permutations(3):
        f = ortho_schubert(w)
        assert f.is_homogeneous() and (f.degree() == w.length() or w.length() == 0)


def test_expand_examples():
    assert expand_in_d_basis(x(1, 2)).coeffs == {idx((), "21"): -1}
    assert expand_in_d_basis(elementary_squares(1, 3)).coeffs == {idx((1, 1), "123"): 4}
    f = d_basis((2, 1), P("132"), 3)
    assert expand_in_d_basis(f).coeffs == {idx((2, 1), "132"): 1}


def test_expansion_recovers_coefficients():
    for w in all_signed_permutations(3):
        exp = expand_in_d_basis(ortho_schubert(w), 3)
        assert not exp.ideal_part()
        assert exp.coeffs == {k: Fraction(v) for k, v in ortho_coefficients(w).items()}


def test_expand_random_polynomials_roundtrip():
    rng = random.Random(3)
    for _ in range(15):
        terms = {}
        for _ in range(4):
            e = tuple(rng.randrange(3) for _ in range(3))
            terms[e] = Fraction(rng.randrange(-5, 6), rng.choice((1, 3)))
        f = Polynomial(3, terms)
        assert expand_in_d_basis(f).reconstruct() == f


def test_ideal_decompose_examples():
    dec = ideal_decompose(elementary_squares(1, 3))
    assert dec.f[0] == Polynomial.one(3) and not dec.f[1] and not dec.g
    dec = ideal_decompose(Polynomial.monomial((3, 0)))
    assert dec.reassemble() == Polynomial.monomial((3, 0))
    with pytest.raises(NotInIdealError):
        ideal_decompose(x(1, 2) + x(2, 2))


def test_ideal_decompose_random_roundtrip():
    rng = random.Random(11)
    n = 3
    gens = [elementary_squares(1, n), elementary_squares(2, n), elementary(n, n)]
    for _ in range(10):
        h = Polynomial.zero(n)
        for g in gens:
            e = tuple(rng.randrange(2) for _ in range(n))
            h = h + g * Polynomial.monomial(e, rng.randrange(-3, 4))
        if not h:
            continue
        assert is_in_ideal(h)
        for d in sorted({sum(e) for e in h.terms}):
            part = h.homogeneous_part(d)
            assert ideal_decompose(part).reassemble() == part


def test_structure_constant_examples():
    box = S("-2,-1,3")
    sc = structure_constants(box, box)
    assert sc.schubert == {S("-3,-1,2"): 1}
    assert sc.ideal == {idx((1, 1), "123"): 1}
    ident = SignedPermutation.identity(3)
    sc = structure_constants(ident, S("3,-1,-2"))
    assert sc.schubert == {S("3,-1,-2"): 1} and not sc.ideal


def test_structure_constant_product_reassembles():
    u, v = S("2,3,1"), S("-2,3,-1")
    sc = structure_constants(u, v)
    total = Polynomial.zero(3)
    for w, c in sc.schubert.items():
        total = total + ortho_schubert(w).scale(c)
    for k, c in sc.ideal.items():
        total = total + d_basis(k.lam, k.pi, 3).scale(c)
    assert total == ortho_schubert(u) * ortho_schubert(v)


def test_restrict():
    assert restrict(S("-2,-1"), 2, 3) == (x(1, 2) + x(2, 2)).scale(half)
    assert restrict(SignedPermutation.identity(2), 2, 3) == Polynomial.one(2)


def test_divided_difference_example():
    rec = divided_difference_property(S("-2,-3,1"), P("213"))
    assert rec.holds
    assert rec.expected == -ortho_schubert(S("-3,-2,1"))
    rec = divided_difference_property(S("1,2,3"), P("213"))
    assert rec.holds and not rec.length_drops and not rec.computed


def test_divided_difference_all_w3():
    for w in all_signed_permutations(3):
        for pi in (P("213"), P("132"), P("231"), P("312"), P("321")):
            assert divided_difference_property(w, pi).holds


def test_schubert_a_in_d_basis():
    # S_pi itself expands to (-1)^l(pi) D_{empty, pi}
    f = schubert_a(P("231"), 3)
    assert expand_in_d_basis(f).coeffs == {idx((), "231"): 1}

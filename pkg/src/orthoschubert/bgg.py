"""Schubert class representatives from divided differences, without tableaux.

The operators D_box = d_box and D_i = -d_i (1 <= i < n) belong to the
simple roots x_1 + x_2 and x_{i+1} - x_i. They satisfy the braid relations
of W~_n and lower D_w by one step: D_a D_w = D_{w s_a} when the length
drops. So D_{w^{-1} w_0} applied to any representative of the point class
gives a representative of sigma_w, which agrees with D_w modulo J_n.

L(h) = D_{w_0}(h) is a linear functional on polynomials of degree
N = n(n-1) that kills J_n. The Schubert-sector coefficients of a class
representative r are recovered by solving
    sum_i c_i L(B_i x^a) = L(r x^a)
over all monomials x^a of the complementary degree, with B_i running over
the D_{lambda,pi} with lambda in F_{n-1}.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linalg import solve_square
from .ortho import DBasisIndex, _d_basis, d_basis_indices
from .poly import Polynomial, divided_difference_word, monomials_of_degree
from .weyl import BOX, SignedPermutation, canonical_reduced_word, longest_element


def root_operator(f: Polynomial, word) -> Polynomial:
    """D_{a_1} ... D_{a_k} f, the last letter acting first."""
    sign = -1 if sum(1 for a in word if a != BOX) % 2 else 1
    out = divided_difference_word(f, word)
    return -out if sign < 0 else out


def top_degree(n: int) -> int:
    return n * (n - 1)


@lru_cache(maxsize=None)
def _longest_word(n: int) -> tuple[int, ...]:
    return canonical_reduced_word(longest_element(n))


@lru_cache(maxsize=None)
def _monomial_values(n: int) -> dict[tuple[int, ...], Fraction]:
    word = _longest_word(n)
    out = {}
    for e in monomials_of_degree(n, top_degree(n)):
        out[e] = root_operator(Polynomial.monomial(e), word).constant_term()
    return out


def functional(h: Polynomial) -> Fraction:
    """L(h) on the top-degree part of h."""
    n = h.n
    values = _monomial_values(n)
    N = top_degree(n)
    return sum((c * values[e] for e, c in h.terms.items() if sum(e) == N), Fraction(0))


@lru_cache(maxsize=None)
def point_class(n: int) -> Polynomial:
    values = _monomial_values(n)
    for e in monomials_of_degree(n, top_degree(n)):
        if values[e]:
            return Polynomial.monomial(e, 1 / values[e])
    raise AssertionError("top-degree functional vanishes identically")


@lru_cache(maxsize=None)
def _representative(entries: tuple[int, ...]) -> Polynomial:
    w = SignedPermutation(entries)
    n = w.n
    v = w.inverse() * longest_element(n)
    return root_operator(point_class(n), canonical_reduced_word(v))


def class_representative(w: SignedPermutation) -> Polynomial:
    return _representative(w.entries)


def _shifted_value(poly: Polynomial, shift: tuple[int, ...], values) -> Fraction:
    total = Fraction(0)
    for e, c in poly.terms.items():
        v = values.get(tuple(a + b for a, b in zip(e, shift)))
        if v:
            total += c * v
    return total


def schubert_sector_by_pairing(r: Polynomial, d: int) -> dict[DBasisIndex, Fraction]:
    """Schubert-sector coefficients of a degree-d class representative."""
    n = r.n
    idx = [i for i in d_basis_indices(n, d) if i.in_schubert_sector(n)]
    if not idx:
        return {}
    values = _monomial_values(n)
    basis = [_d_basis(i.lam, i.pi, n) for i in idx]
    matrix, rhs = [], []
    for a in monomials_of_degree(n, top_degree(n) - d):
        matrix.append([_shifted_value(b, a, values) for b in basis])
        rhs.append(_shifted_value(r, a, values))
    sol = solve_square(matrix, rhs)
    return {i: c for i, c in zip(idx, sol) if c}


def dual_path_coefficients(w: SignedPermutation) -> dict[DBasisIndex, Fraction]:
    """f^w_{lambda,pi} for lambda in F_{n-1}, computed without tableaux."""
    return schubert_sector_by_pairing(class_representative(w), w.length())

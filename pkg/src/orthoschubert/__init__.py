"""Orthogonal (type D) Schubert polynomials and arithmetic Schubert calculus
on the even orthogonal flag variety, in exact rational arithmetic."""
from fractions import Fraction as Rational

from .arakelov import ArithClass, BottChernPlugin, MissingBottChernInput, arith_degree, chow_product
from .forms import FormElement, integrate, top_form
from .ortho import (
    expand_in_d_basis,
    ideal_decompose,
    ortho_coefficients,
    ortho_schubert,
    structure_constants,
)
from .poly import Polynomial, divided_difference, divided_difference_word, is_dyadic
from .schubert import schubert_a
from .stanley import KLTableau, bh_expansion, f_coeff, kl_tableaux
from .symfun import Partition, ptilde, ptilde_x, schur_p
from .weyl import PermutationA, SignedPermutation

__version__ = "0.1.0"

__all__ = [
    "ArithClass",
    "BottChernPlugin",
    "FormElement",
    "KLTableau",
    "MissingBottChernInput",
    "Partition",
    "PermutationA",
    "Polynomial",
    "Rational",
    "SignedPermutation",
    "arith_degree",
    "bh_expansion",
    "chow_product",
    "divided_difference",
    "divided_difference_word",
    "expand_in_d_basis",
    "f_coeff",
    "ideal_decompose",
    "integrate",
    "is_dyadic",
    "kl_tableaux",
    "ortho_coefficients",
    "ortho_schubert",
    "ptilde",
    "ptilde_x",
    "schubert_a",
    "schur_p",
    "structure_constants",
    "top_form",
]

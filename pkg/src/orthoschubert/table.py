"""Human-readable rendering of orthogonal Schubert polynomials.

A row reads ``w | word | terms``. The word is a reduced word of the minimal
coset representative of w modulo S_n followed by one of the S_n part, and the
terms are ``c P<lambda> S<pi>`` with the sign (-1)^{l(pi)} of S_pi(-X_n)
folded into c.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .ortho import DBasisIndex, ortho_coefficients
from .weyl import PermutationA, SignedPermutation, all_signed_permutations, canonical_reduced_word, format_word


def coset_factor(w: SignedPermutation) -> tuple[SignedPermutation, PermutationA]:
    """w = v * pi with v minimal in w S_n and pi in S_n."""
    v = SignedPermutation(tuple(sorted(w.entries)))
    pi = v.inverse() * w
    return v, pi.to_permutation()


def row_word(w: SignedPermutation) -> str:
    if w.length() == 0:
        return "id"
    v, pi = coset_factor(w)
    return format_word(canonical_reduced_word(v) + canonical_reduced_word(pi.signed()))


def _term_key(item):
    idx = item[0]
    return (idx.pi.length(), tuple(-a for a in idx.pi.entries), tuple(-a for a in idx.lam.parts))


def _monomial(idx: DBasisIndex) -> str:
    parts = []
    if idx.lam.parts:
        parts.append("P" + idx.lam.label())
    if idx.pi.length():
        parts.append("S" + str(idx.pi))
    return " ".join(parts)


def displayed_terms(w: SignedPermutation) -> list[tuple[DBasisIndex, Fraction]]:
    """(index, displayed coefficient) in table order."""
    items = sorted(ortho_coefficients(w).items(), key=_term_key)
    return [(idx, Fraction(c) * (-1) ** idx.pi.length()) for idx, c in items]


def render_terms(w: SignedPermutation) -> str:
    out = []
    for idx, c in displayed_terms(w):
        mon = _monomial(idx)
        a = abs(c)
        if not mon:
            body = str(a)
        else:
            body = mon if a == 1 else f"{a} {mon}"
        if c < 0:
            out.append("- " + body)
        else:
            out.append(("+ " if out else "") + body)
    return " ".join(out) or "0"


def render_row(w: SignedPermutation) -> str:
    return f"{w} | {row_word(w)} | {render_terms(w)}"


def table_order(n: int) -> list[SignedPermutation]:
    """Rows grouped by coset representative, each group in S_n order."""
    elems = list(all_signed_permutations(n))
    reps = sorted({coset_factor(w)[0] for w in elems}, key=lambda v: (v.length(), canonical_reduced_word(v)))
    rank = {v: i for i, v in enumerate(reps)}

    def key(w):
        v, pi = coset_factor(w)
        return (rank[v], pi.length(), canonical_reduced_word(pi.signed()))

    return sorted(elems, key=key)


def table_rows(n: int, jobs: int = 1) -> list[str]:
    order = table_order(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(render_row, order))
    return [render_row(w) for w in order]


def table_json(n: int) -> list[dict]:
    rows = []
    for w in table_order(n):
        rows.append({
            "w": str(w),
            "word": row_word(w),
            "terms": [
                {"lambda": list(idx.lam.parts), "pi": str(idx.pi), "coef": str(c)}
                for idx, c in displayed_terms(w)
            ],
        })
    return rows

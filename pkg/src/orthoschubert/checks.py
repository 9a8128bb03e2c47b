"""Named invariant suites, shared by the ``check`` subcommand and the tests.

Each suite returns a list of :class:`CheckResult`. Nothing here is
tolerance-based; every comparison is exact.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import arakelov, bgg, forms, ortho, symfun
from .linalg import rank
from .poly import Polynomial, divided_difference_word, grevlex_key, monomials_of_degree
from .table import table_rows
from .weyl import (
    PermutationA,
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    random_signed_permutation,
    reduced_words,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_json_obj(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _result(name: str, failures: list, total: int, extra: str = "") -> CheckResult:
    detail = f"{total - len(failures)}/{total} ok"
    if failures:
        detail += f"; first failure: {failures[0]}"
    if extra:
        detail += f"; {extra}"
    return CheckResult(name, not failures, detail)


# ---------------------------------------------------------------------------
# table and dual path


def suite_table(n: int = 3) -> list[CheckResult]:
    t0 = time.perf_counter()
    rows = table_rows(n)
    elapsed = time.perf_counter() - t0
    expected = sum(1 for _ in all_signed_permutations(n))
    return [CheckResult("table-rows", len(rows) == expected, f"{len(rows)} rows in {elapsed:.2f}s")]


def suite_dual_path(samples: int = 50, seed: int = 0) -> list[CheckResult]:
    out = []
    fails = []
    elems = list(all_signed_permutations(3))
    for w in elems:
        if bgg.dual_path_coefficients(w) != ortho.ortho_coefficients(w):
            fails.append(str(w))
    out.append(_result("dual-path-W3", fails, len(elems)))
    rng = random.Random(seed)
    fails = []
    for _ in range(samples):
        w = random_signed_permutation(4, rng)
        if bgg.dual_path_coefficients(w) != ortho.ortho_coefficients(w):
            fails.append(str(w))
    out.append(_result("dual-path-W4-sample", fails, samples, f"seed {seed}"))
    return out


# ---------------------------------------------------------------------------
# P~ properties


def _e_squares_in_e(k: int, size: int) -> Polynomial:
    """e_k(X^2) = (-1)^k sum_{a+b=2k} (-1)^a e_a e_b in the e-alphabet."""
    def e(a):
        return Polynomial.one(size) if a == 0 else Polynomial.var(a, size)

    total = Polynomial.zero(size)
    for a in range(0, 2 * k + 1):
        term = e(a) * e(2 * k - a)
        total = total + (term if (a + k) % 2 == 0 else -term)
    return total


def suite_ptilde(max_weight: int = 8, max_n: int = 4, nonneg_weight: int = 6,
                 eta_weight: int = 6, eta_vars: int = 8) -> list[CheckResult]:
    out = []
    size = max_weight

    fails, total = [], 0
    for k in range(1, max_weight // 2 + 1):
        total += 1
        lhs = symfun.ptilde((k, k)).with_vars(size)
        if lhs != _e_squares_in_e(k, size).scale(Fraction(1, 4)):
            fails.append((k, k))
    out.append(_result("ptilde-b-square", fails, total))

    fails, total = [], 0
    for d in range(2, max_weight + 1):
        for lam in symfun.partitions(d):
            for k in set(lam.parts):
                if lam.parts.count(k) < 2:
                    continue
                total += 1
                rest = lam.remove(k, 2)
                lhs = symfun.ptilde(lam).with_vars(size)
                rhs = symfun.ptilde((k, k)).with_vars(size) * symfun.ptilde(rest).with_vars(size)
                if lhs != rhs:
                    fails.append(lam.label())
    out.append(_result("ptilde-c-factor", fails, total))

    fails, total = [], 0
    for d in range(1, nonneg_weight + 1):
        for lam in symfun.partitions(d):
            total += 1
            if any(c < 0 for c in symfun.ptilde_x(lam, d).terms.values()):
                fails.append(lam.label())
    out.append(_result("ptilde-d-nonneg", fails, total))

    fails, total = [], 0
    for n in range(1, max_n + 1):
        for d in range(1, max_weight + 1):
            for lam in symfun.partitions(d):
                if lam.largest > n:
                    total += 1
                    if symfun.ptilde_x(lam, n):
                        fails.append((lam.label(), n))
            basis = [symfun.ptilde_x(lam, n).terms for lam in symfun.partitions_G(n, d)]
            dim = sum(1 for lam in symfun.partitions(d) if lam.length <= n)
            total += 1
            if len(basis) != dim or rank(basis, grevlex_key) != dim:
                fails.append(("basis", n, d))
    out.append(_result("ptilde-e-vanish-basis", fails, total))

    fails, total = [], 0
    for n in range(1, max_n + 1):
        pn = symfun.ptilde_x((n,), n)
        for d in range(0, max_weight - n + 1):
            for lam in symfun.partitions_G(n, d):
                total += 1
                if pn * symfun.ptilde_x(lam, n) != symfun.ptilde_x((n,) + lam.parts, n):
                    fails.append((lam.label(), n))
    out.append(_result("ptilde-f-top-row", fails, total))

    fails, total = [], 0
    for d in range(1, eta_weight + 1):
        for lam in symfun.partitions(d):
            if lam.is_strict():
                continue
            total += 1
            if symfun.schur_p(lam, eta_vars):
                fails.append(lam.label())
    out.append(_result("eta-kills-nonstrict", fails, total))
    return out


# ---------------------------------------------------------------------------
# divided differences


def suite_divided_difference(samples: int = 20, seed: int = 0) -> list[CheckResult]:
    out = []
    fails, total = [], 0
    simple = [PermutationA((2, 1, 3)), PermutationA((1, 3, 2))]
    for w in all_signed_permutations(3):
        for pi in simple:
            total += 1
            if not ortho.divided_difference_property(w, pi).holds:
                fails.append(f"{w} * {pi}")
    out.append(_result("dd-property-W3", fails, total))

    rng = random.Random(seed)
    perms4 = all_permutations(4)
    fails, literal = [], []
    for _ in range(samples):
        w = random_signed_permutation(4, rng)
        pi = rng.choice(perms4)
        if not ortho.divided_difference_property(w, pi).holds:
            fails.append(f"{w} * {pi}")
        if not ortho.divided_difference_property(w, pi, literal=True).holds:
            literal.append(f"{w} * {pi}")
    out.append(_result("dd-property-W4-sample", fails, samples,
                       f"seed {seed}; target w*pi read literally fails {len(literal)}/{samples}"))

    fails, total = [], 0
    for w in all_signed_permutations(3):
        words = reduced_words(w)
        corpus = [Polynomial.monomial(e) for e in monomials_of_degree(3, w.length())]
        total += 1
        ref = [divided_difference_word(f, words[0]) for f in corpus]
        for word in words[1:]:
            if [divided_difference_word(f, word) for f in corpus] != ref:
                fails.append(f"{w}: {words[0]} vs {word}")
                break
    out.append(_result("dd-well-defined-W3", fails, total))

    # the sign-corrected operators D_box = d_box, D_i = -d_i for comparison
    fails, total = [], 0
    for w in all_signed_permutations(3):
        words = reduced_words(w)
        corpus = [Polynomial.monomial(e) for e in monomials_of_degree(3, w.length())]
        total += 1
        ref = [bgg.root_operator(f, words[0]) for f in corpus]
        if any([bgg.root_operator(f, word) for f in corpus] != ref for word in words[1:]):
            fails.append(str(w))
    out.append(_result("root-operators-well-defined-W3", fails, total))
    return out


# ---------------------------------------------------------------------------
# structure constants and stability


def suite_structure(n: int = 3, jobs: int = 1, cache=None) -> list[CheckResult]:
    elems = list(all_signed_permutations(n))
    pairs = [(u, v) for u in elems for v in elems]
    t0 = time.perf_counter()
    results = ortho.structure_constants_batch(pairs, jobs=jobs, cache=cache)
    elapsed = time.perf_counter() - t0
    table = {(str(r.u), str(r.v)): r for r in results}
    ident = SignedPermutation.identity(n)

    neg, length, flagged = [], [], []
    for r in results:
        for w, d in r.schubert.items():
            if d < 0 or d.denominator != 1:
                neg.append(f"{r.u}*{r.v}->{w}: {d}")
            if w.length() != r.u.length() + r.v.length():
                length.append(f"{r.u}*{r.v}->{w}")
        if not r.ideal_integral():
            flagged.append(f"{r.u}*{r.v}")
    sym = [k for k, r in table.items() if table[(k[1], k[0])].schubert != r.schubert]
    idf = [str(v) for v in elems if table[(str(ident), str(v))].schubert != {v: 1}
           or table[(str(ident), str(v))].ideal]
    return [
        _result("structure-nonneg-integer", neg, len(results), f"{elapsed:.1f}s"),
        _result("structure-length", length, len(results)),
        _result("structure-symmetry", sym, len(results)),
        _result("structure-identity", idf, len(elems)),
        CheckResult("structure-ideal-integrality", True,
                    f"{len(flagged)} products with non-integral ideal coefficients (flagged)"),
    ]


def suite_stability(m: int = 2, n: int = 3) -> list[CheckResult]:
    fails, mod_j, total = [], [], 0
    for w in all_signed_permutations(m):
        total += 1
        diff = ortho.restrict(w, m, n) - ortho.ortho_schubert(w)
        if diff:
            fails.append(str(w))
            if not ortho.is_in_ideal(diff, m):
                mod_j.append(str(w))
    return [
        _result(f"stability-W{m}-W{n}", fails, total),
        _result(f"stability-mod-J-W{m}-W{n}", mod_j, total),
    ]


# ---------------------------------------------------------------------------
# forms and arithmetic classes


def suite_integration(ns=(2, 3)) -> list[CheckResult]:
    out = []
    for n in ns:
        t0 = time.perf_counter()
        vol = forms.integrate(forms.top_form(n))
        pt = forms.integrate(forms.point_class_form(n))
        expected = forms.volume_factor(n)
        out.append(CheckResult(f"integrate-omega-n{n}", vol == expected, f"{vol}"))
        out.append(CheckResult(f"point-class-n{n}", pt == 1, f"{pt} in {time.perf_counter() - t0:.2f}s"))
    return out


N2_MONOMIALS = ((3, 0), (2, 1), (1, 2), (0, 3))


def suite_arakelov() -> list[CheckResult]:
    out = []
    for n in (2, 3, 4):
        got = arakelov.ctilde_pair_component(2, n)
        out.append(CheckResult(f"ctilde-pair-quadratic-n{n}", got == arakelov.ctilde_pair_quadratic(n)))

    degrees = {}
    fails = []
    for mono in N2_MONOMIALS:
        deg = arakelov.arith_degree(mono, 2)
        degrees[mono] = deg
        if not isinstance(deg, Fraction):
            fails.append(mono)
    out.append(_result("arith-degree-rational-n2", fails, len(N2_MONOMIALS),
                       ", ".join(f"{m}: {d}" for m, d in degrees.items())))

    # two decompositions of the same ideal element differ by a syzygy
    fails, total = [], 0
    for mono in N2_MONOMIALS:
        h = arakelov.arith_monomial(mono, 2)
        resid = Polynomial.monomial(mono)
        for w, c in h.schubert.items():
            resid = resid - ortho.ortho_schubert(w).scale(c)
        dec = ortho.ideal_decompose(resid, 2)
        e2 = symfun.elementary(2, 2)
        q = symfun.elementary_squares(1, 2)
        for t in (Polynomial.var(1, 2), Polynomial.var(2, 2)):
            total += 1
            f1 = dec.f[0] + t * e2
            g = dec.g - t * q
            alt = arakelov.form_from_decomposition((f1,), g, 2)
            if arakelov.degree_of_form(alt) != arakelov.degree_of_form(h.form):
                fails.append(mono)
    out.append(_result("decomposition-independence-n2", fails, total))

    # degree of x^_i * (degree-2 class) computed through the product
    fails, total = [], 0
    for mono in N2_MONOMIALS:
        first = 0 if mono[0] else 1
        rest = list(mono)
        rest[first] -= 1
        a = arakelov.arith_monomial(tuple(1 if i == first else 0 for i in range(2)), 2)
        b = arakelov.arith_monomial(tuple(rest), 2)
        total += 1
        prod = arakelov.chow_product(a, b)
        if prod.schubert or arakelov.degree_of_form(prod.form) != degrees[mono]:
            fails.append(mono)
    lin = arakelov.arith_polynomial(Polynomial.monomial((3, 0)) + Polynomial.monomial((0, 3)).scale(2), 2)
    total += 1
    if arakelov.degree_of_form(lin.form) != degrees[(3, 0)] + 2 * degrees[(0, 3)]:
        fails.append("linearity")
    out.append(_result("additivity-n2", fails, total))

    try:
        arakelov.arith_degree((7, 0, 0), 3)
        out.append(CheckResult("plugin-contract-n3", False, "no error without plugin"))
    except arakelov.MissingBottChernInput as exc:
        out.append(CheckResult("plugin-contract-n3", True, str(exc)))
    return out


def suite_rationality(n: int = 2) -> list[CheckResult]:
    fails, total = [], 0
    for mono in monomials_of_degree(n, arakelov.dim_flag(n) + 1):
        total += 1
        cls = arakelov.arith_monomial(mono, n)
        if cls.schubert or not cls.form.is_multiple_of_top():
            fails.append(mono)
            continue
        if not isinstance(arakelov.degree_of_form(cls.form), Fraction):
            fails.append(mono)
    return [_result(f"rationality-n{n}", fails, total)]


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "table": suite_table,
    "dual-path": suite_dual_path,
    "ptilde": suite_ptilde,
    "divided-difference": suite_divided_difference,
    "structure": suite_structure,
    "stability": suite_stability,
    "integration": suite_integration,
    "arakelov": suite_arakelov,
    "rationality": suite_rationality,
}


def run_suite(name: str, **kwargs) -> list[CheckResult]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}") from None
    return fn(**kwargs)

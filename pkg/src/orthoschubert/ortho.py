"""Orthogonal Schubert polynomials D_w and the basis D_{lambda,pi}.

D_{lambda,pi} = P~_lambda(X_n) S_pi(-X_n) = (-1)^l(pi) P~_lambda(X_n) S_pi(X_n)
for lambda in G_n and pi in S_n. These form a basis of the polynomial ring;
the ones with lambda outside F_{n-1} span the ideal J_n generated by
e_i(X_n^2), 1 <= i < n, and e_n(X_n).
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .cache import DiskCache
from .linalg import LeadingTermBasis, NotInSpanError
from .poly import Polynomial, PolynomialError, divided_difference_word, grevlex_key, is_dyadic, linear_combination
from .schubert import schubert_a
from .stanley import bh_expansion
from .symfun import Partition, elementary, elementary_squares, partitions, ptilde_x
from .weyl import PermutationA, SignedPermutation, WeylError, all_permutations, all_signed_permutations

log = logging.getLogger(__name__)


class NotInIdealError(ValueError):
    def __init__(self, offending):
        names = ", ".join(str(i) for i in offending)
        super().__init__(f"polynomial is not in J_n: nonzero coefficients on {names}")
        self.offending = list(offending)


@dataclass(frozen=True, order=True)
class DBasisIndex:
    lam: Partition
    pi: PermutationA

    @property
    def degree(self) -> int:
        return self.lam.weight + self.pi.length()

    def in_schubert_sector(self, n: int) -> bool:
        return self.lam.in_F(n - 1)

    def __str__(self) -> str:
        return f"({self.lam}; {self.pi})"

    def to_json_obj(self) -> dict:
        return {"lambda": list(self.lam.parts), "pi": str(self.pi)}


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def _as_perm(pi, n: int) -> PermutationA:
    if pi.n > n:
        raise WeylError(f"permutation {pi} does not lie in S_{n}")
    return pi.embed(n) if pi.n < n else pi


def d_basis(lam, pi: PermutationA, n: int) -> Polynomial:
    lam = _as_partition(lam)
    if not lam.in_G(n):
        raise PolynomialError(f"largest part of {lam} exceeds n={n}")
    pi = _as_perm(pi, n)
    return _d_basis(lam, pi, n)


@lru_cache(maxsize=None)
def _d_basis(lam: Partition, pi: PermutationA, n: int) -> Polynomial:
    out = ptilde_x(lam, n) * schubert_a(pi, n)
    return -out if pi.length() % 2 else out


@lru_cache(maxsize=None)
def d_basis_indices(n: int, d: int) -> tuple[DBasisIndex, ...]:
    """All (lambda in G_n, pi in S_n) of degree d, Schubert sector first."""
    out = []
    for pi in all_permutations(n):
        k = d - pi.length()
        if k < 0:
            continue
        for lam in partitions(k, n):
            out.append(DBasisIndex(lam, pi))
    out.sort(key=lambda i: (not i.in_schubert_sector(n), i.pi.length(), i.pi.entries, i.lam.parts))
    return tuple(out)


@lru_cache(maxsize=None)
def _degree_basis(n: int, d: int) -> LeadingTermBasis:
    basis = LeadingTermBasis(grevlex_key)
    for idx in d_basis_indices(n, d):
        basis.add(_d_basis(idx.lam, idx.pi, n).terms, idx)
    return basis


@dataclass(frozen=True)
class DExpansion:
    n: int
    coeffs: dict[DBasisIndex, Fraction]

    def schubert_part(self) -> dict[DBasisIndex, Fraction]:
        return {k: v for k, v in self.coeffs.items() if k.in_schubert_sector(self.n)}

    def ideal_part(self) -> dict[DBasisIndex, Fraction]:
        return {k: v for k, v in self.coeffs.items() if not k.in_schubert_sector(self.n)}

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0].degree, kv[0].pi.entries, kv[0].lam.parts))

    def reconstruct(self) -> Polynomial:
        return linear_combination(
            ((c, d_basis(k.lam, k.pi, self.n)) for k, c in self.coeffs.items()), self.n
        )

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [dict(k.to_json_obj(), coef=_frac_str(c)) for k, c in self.items()],
        }


def _frac_str(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def expand_in_d_basis(f: Polynomial, n: int | None = None) -> DExpansion:
    """Write f uniquely in the D_{lambda,pi} basis, degree by degree."""
    n = f.n if n is None else n
    if f.n != n:
        raise PolynomialError(f"polynomial has {f.n} variables, expected {n}")
    coeffs: dict[DBasisIndex, Fraction] = {}
    degrees = sorted({sum(e) for e in f.terms})
    for d in degrees:
        part = f.homogeneous_part(d)
        try:
            coeffs.update(_degree_basis(n, d).express(part.terms))
        except NotInSpanError as exc:  # cannot happen for a basis
            raise AssertionError(f"degree {d} basis failed to span") from exc
    out = DExpansion(n, {k: v for k, v in coeffs.items() if v})
    if out.reconstruct() != f:
        raise AssertionError("expansion does not reconstruct the input")
    bad = [k for k, v in out.coeffs.items() if not is_dyadic(v)]
    if bad and f.coefficients_dyadic():
        raise AssertionError(f"non-dyadic expansion coefficients on {bad}")
    return out


# ---------------------------------------------------------------------------
# orthogonal Schubert polynomials


@lru_cache(maxsize=None)
def _schubert_sector_coeffs(entries: tuple[int, ...]) -> tuple[tuple[DBasisIndex, int], ...]:
    w = SignedPermutation(entries)
    n = w.n
    items = [
        (DBasisIndex(lam, pi), c)
        for (lam, pi), c in bh_expansion(w).coeffs.items()
        if lam.in_F(n - 1)
    ]
    items.sort(key=lambda kv: (kv[0].pi.length(), kv[0].pi.entries, kv[0].lam.parts))
    return tuple(items)


def ortho_coefficients(w: SignedPermutation) -> dict[DBasisIndex, int]:
    """f^w_{lambda,pi} restricted to lambda in F_{n-1}."""
    return dict(_schubert_sector_coeffs(w.entries))


@lru_cache(maxsize=None)
def _ortho(entries: tuple[int, ...]) -> Polynomial:
    n = len(entries)
    return linear_combination(
        ((c, _d_basis(k.lam, k.pi, n)) for k, c in _schubert_sector_coeffs(entries)), n
    )


def ortho_schubert(w: SignedPermutation, n: int | None = None) -> Polynomial:
    if n is not None and n != w.n:
        if n < w.n:
            raise WeylError(f"{w} does not lie in W~_{n}")
        w = w.embed(n)
    return _ortho(w.entries)


# ---------------------------------------------------------------------------
# the ideal J_n


@dataclass(frozen=True)
class IdealDecomposition:
    n: int
    f: tuple[Polynomial, ...]  # f[i-1] multiplies e_i(X_n^2)
    g: Polynomial

    def reassemble(self) -> Polynomial:
        n = self.n
        total = self.g * elementary(n, n)
        for i, fi in enumerate(self.f, start=1):
            if fi:
                total = total + elementary_squares(i, n) * fi
        return total

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "f": [fi.to_json_obj() for fi in self.f],
            "g": self.g.to_json_obj(),
        }


def route_ideal_index(idx: DBasisIndex, n: int) -> tuple[int, Fraction, DBasisIndex]:
    """Where an ideal basis element goes: (i, factor, smaller index).

    i = n means D_idx = factor * e_n(X_n) * D_smaller; otherwise
    D_idx = factor * e_i(X_n^2) * D_smaller.
    """
    lam = idx.lam
    if lam.largest == n:
        return n, Fraction(1, 2), DBasisIndex(lam.remove(n), idx.pi)
    r = lam.largest_repeated_part()
    if r == 0:
        raise ValueError(f"{idx} lies in the Schubert sector")
    return r, Fraction(1, 4), DBasisIndex(lam.remove(r, 2), idx.pi)


def ideal_decompose(h: Polynomial, n: int | None = None) -> IdealDecomposition:
    n = h.n if n is None else n
    exp = expand_in_d_basis(h, n)
    offending = sorted(k for k, v in exp.schubert_part().items() if v)
    if offending:
        raise NotInIdealError(offending)
    fs: list[dict[DBasisIndex, Fraction]] = [dict() for _ in range(n - 1)]
    g: dict[DBasisIndex, Fraction] = {}
    for idx, c in exp.ideal_part().items():
        i, factor, smaller = route_ideal_index(idx, n)
        target = g if i == n else fs[i - 1]
        target[smaller] = target.get(smaller, 0) + factor * c

    def build(m):
        return linear_combination(((c, d_basis(k.lam, k.pi, n)) for k, c in m.items()), n)

    out = IdealDecomposition(n, tuple(build(m) for m in fs), build(g))
    if out.reassemble() != h:
        raise AssertionError("ideal decomposition failed to reassemble")
    return out


# ---------------------------------------------------------------------------
# structure constants


@dataclass(frozen=True)
class StructureConstants:
    n: int
    u: SignedPermutation
    v: SignedPermutation
    schubert: dict[SignedPermutation, Fraction]
    ideal: dict[DBasisIndex, Fraction] = field(default_factory=dict)

    def schubert_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.schubert.values())

    def ideal_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.ideal.values())

    def non_integral_ideal(self) -> dict[DBasisIndex, Fraction]:
        return {k: c for k, c in self.ideal.items() if Fraction(c).denominator != 1}

    def to_json_obj(self) -> dict:
        sch = sorted(self.schubert.items(), key=lambda kv: (kv[0].length(), kv[0].entries))
        ide = sorted(self.ideal.items(), key=lambda kv: (kv[0].degree, kv[0].pi.entries, kv[0].lam.parts))
        return {
            "n": self.n,
            "u": str(self.u),
            "v": str(self.v),
            "schubert": [
                {"w": str(w), "d": int(c) if Fraction(c).denominator == 1 else _frac_str(c)}
                for w, c in sch
            ],
            "ideal": [
                {"lambda": list(k.lam.parts), "pi": str(k.pi), "d": _frac_str(c)} for k, c in ide
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "StructureConstants":
        n = obj["n"]
        return cls(
            n,
            SignedPermutation.parse(obj["u"]),
            SignedPermutation.parse(obj["v"]),
            {SignedPermutation.parse(e["w"]): Fraction(e["d"]) for e in obj["schubert"]},
            {
                DBasisIndex(Partition(tuple(e["lambda"])), PermutationA.parse(e["pi"])): Fraction(e["d"])
                for e in obj["ideal"]
            },
        )


@lru_cache(maxsize=None)
def _schubert_vector_basis(n: int, d: int) -> LeadingTermBasis:
    order = {idx: k for k, idx in enumerate(reversed(d_basis_indices(n, d)))}
    basis = LeadingTermBasis(order.__getitem__)
    for w in all_signed_permutations(n):
        if w.length() == d:
            basis.add(ortho_coefficients(w), w)
    return basis


def _compute_structure_constants(u: SignedPermutation, v: SignedPermutation) -> StructureConstants:
    n = u.n
    prod = ortho_schubert(u) * ortho_schubert(v)
    exp = expand_in_d_basis(prod, n)
    d = u.length() + v.length()
    sch_part = exp.schubert_part()
    schubert = _schubert_vector_basis(n, d).express(sch_part) if sch_part else {}
    return StructureConstants(n, u, v, {w: c for w, c in schubert.items() if c}, exp.ideal_part())


def _sc_key(u: SignedPermutation, v: SignedPermutation) -> list:
    return ["structure-constants", 1, u.n, str(u), str(v)]


def structure_constants(u: SignedPermutation, v: SignedPermutation, n: int | None = None,
                        cache: DiskCache | None = None) -> StructureConstants:
    if n is not None:
        u = u.embed(n) if u.n < n else u
        v = v.embed(n) if v.n < n else v
    if u.n != v.n:
        raise WeylError("u and v must lie in the same group")
    if cache is not None:
        hit = cache.get(_sc_key(u, v))
        if hit is not None:
            return StructureConstants.from_json_obj(hit)
    sc = _compute_structure_constants(u, v)
    if cache is not None:
        cache.put(_sc_key(u, v), sc.to_json_obj())
    return sc


def _sc_job(args):
    u_text, v_text = args
    return structure_constants(SignedPermutation.parse(u_text), SignedPermutation.parse(v_text)).to_json_obj()


def structure_constants_batch(pairs: Iterable[tuple[SignedPermutation, SignedPermutation]],
                              jobs: int = 1, cache: DiskCache | None = None) -> list[StructureConstants]:
    """Many products; with jobs > 1 uncached pairs run in worker processes."""
    pairs = list(pairs)
    results: list[StructureConstants | None] = [None] * len(pairs)
    todo = []
    for k, (u, v) in enumerate(pairs):
        hit = cache.get(_sc_key(u, v)) if cache is not None else None
        if hit is not None:
            results[k] = StructureConstants.from_json_obj(hit)
        else:
            todo.append(k)
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            objs = list(pool.map(_sc_job, [(str(pairs[k][0]), str(pairs[k][1])) for k in todo]))
        for k, obj in zip(todo, objs):
            results[k] = StructureConstants.from_json_obj(obj)
    else:
        for k in todo:
            results[k] = _compute_structure_constants(*pairs[k])
    if cache is not None:
        for k in todo:
            cache.put(_sc_key(*pairs[k]), results[k].to_json_obj())
    return results  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# stability and divided differences


def restrict(w: SignedPermutation, m: int, n: int) -> Polynomial:
    """D_{i(w)}(X_n) at x_{m+1} = ... = x_n = 0, as a polynomial in m variables."""
    if not m < n:
        raise WeylError("restriction needs m < n")
    if w.n != m:
        raise WeylError(f"{w} is not in W~_{m}")
    big = ortho_schubert(w.embed(n))
    return big.set_zero(range(m + 1, n + 1)).with_vars(m)


@dataclass(frozen=True)
class DividedDifferenceRecord:
    w: SignedPermutation
    pi: PermutationA
    word: tuple[int, ...]
    length_drops: bool
    computed: Polynomial
    expected: Polynomial

    @property
    def holds(self) -> bool:
        return self.computed == self.expected


def divided_difference_property(w: SignedPermutation, pi: PermutationA, n: int | None = None,
                                literal: bool = False) -> DividedDifferenceRecord:
    """Compare d_pi D_w with (-1)^l(pi) D_{w pi^-1} (or 0).

    d_pi = d_{a_1} o ... o d_{a_l} for pi = s_{a_1} ... s_{a_l}, so the last
    letter acts first and the target is w pi^-1. ``literal=True`` uses w pi
    instead; the two agree when pi is an involution.
    """
    n = w.n if n is None else n
    w = w.embed(n) if w.n < n else w
    pi = _as_perm(pi, n)
    word = pi.reduced_word()
    computed = divided_difference_word(ortho_schubert(w), word)
    target = pi if literal else pi.inverse()
    wp = w * target.signed()
    drops = wp.length() == w.length() - pi.length()
    if drops:
        expected = ortho_schubert(wp)
        if pi.length() % 2:
            expected = -expected
    else:
        expected = Polynomial.zero(n)
    return DividedDifferenceRecord(w, pi, word, drops, computed, expected)


def is_in_ideal(h: Polynomial, n: int | None = None) -> bool:
    n = h.n if n is None else n
    return not any(expand_in_d_basis(h, n).schubert_part().values())


def schubert_sector_rank(n: int, d: int) -> tuple[int, int]:
    """(rank of {D_w : l(w) = d} together with the degree-d ideal basis, number of degree-d monomials)."""
    from .linalg import rank as _rank
    from .poly import monomials_of_degree

    vecs = [ortho_schubert(w).terms for w in all_signed_permutations(n) if w.length() == d]
    vecs += [
        d_basis(i.lam, i.pi, n).terms for i in d_basis_indices(n, d) if not i.in_schubert_sector(n)
    ]
    return _rank(vecs, grevlex_key), len(monomials_of_degree(n, d))

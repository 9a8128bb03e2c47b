"""Partitions, P~-functions of Pragacz-Ratajski, Pfaffians and Schur P-functions.

A P~-function is stored as a polynomial in the elementary symmetric
functions e_1, e_2, ... (variable k of the polynomial is e_k). Specializing
e_k to e_k(x_1..x_n) or to q_k(y_1..y_m) gives the functions in X_n or the
Schur P-functions.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .poly import Polynomial, PolynomialError

HALF = Fraction(1, 2)


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"{parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "[]", "()"):
            return cls(())
        text = text.strip("[]()")
        try:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        except ValueError as exc:
            raise PartitionError(f"cannot parse partition {text!r}") from exc

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "[]"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def is_strict(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def in_G(self, n: int) -> bool:
        return self.largest <= n

    def in_F(self, n: int) -> bool:
        return self.is_strict() and self.largest <= n

    def largest_repeated_part(self) -> int:
        """r_lambda; 0 when there is no repeated part."""
        best = 0
        for a, b in zip(self.parts, self.parts[1:]):
            if a == b and a > best:
                best = a
        return best

    def remove(self, part: int, copies: int = 1) -> "Partition":
        parts = list(self.parts)
        for _ in range(copies):
            parts.remove(part)
        return Partition(tuple(parts))

    def union(self, *extra: int) -> "Partition":
        return Partition(tuple(sorted(self.parts + tuple(extra), reverse=True)))

    def label(self) -> str:
        """Compact label as in P21; comma separated when a part exceeds 9."""
        if any(p > 9 for p in self.parts):
            return "{" + ",".join(map(str, self.parts)) + "}"
        return "".join(map(str, self.parts))


def partitions(total: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` with parts at most ``max_part``, in reverse lex order."""
    max_part = total if max_part is None else max_part

    def rec(left: int, cap: int):
        if left == 0:
            yield ()
            return
        for p in range(min(left, cap), 0, -1):
            for rest in rec(left - p, p):
                yield (p,) + rest

    for parts in rec(total, max_part):
        yield Partition(parts)


def strict_partitions(total: int, max_part: int | None = None) -> Iterator[Partition]:
    for lam in partitions(total, max_part):
        if lam.is_strict():
            yield lam


def partitions_G(n: int, total: int) -> list[Partition]:
    return list(partitions(total, n))


def partitions_F(n: int, total: int) -> list[Partition]:
    return list(strict_partitions(total, n))


# ---------------------------------------------------------------------------
# symmetric polynomials in X_n


@lru_cache(maxsize=None)
def elementary(k: int, n: int) -> Polynomial:
    """e_k(x_1, ..., x_n)."""
    if k < 0:
        raise PolynomialError(f"e_{k} undefined")
    if k > n:
        return Polynomial.zero(n)
    terms = {}
    for subset in itertools.combinations(range(n), k):
        exp = [0] * n
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = 1
    return Polynomial(n, terms)


@lru_cache(maxsize=None)
def elementary_squares(k: int, n: int) -> Polynomial:
    """e_k(x_1^2, ..., x_n^2)."""
    e = elementary(k, n)
    return Polynomial(n, {tuple(2 * a for a in exp): c for exp, c in e.terms.items()})


@lru_cache(maxsize=None)
def power_sum(k: int, n: int) -> Polynomial:
    if k < 1:
        raise PolynomialError("power sums are indexed from 1")
    terms = {}
    for i in range(n):
        exp = [0] * n
        exp[i] = k
        terms[tuple(exp)] = 1
    return Polynomial(n, terms)


# ---------------------------------------------------------------------------
# P~-functions in the e-alphabet


def _e_var(k: int, size: int) -> Polynomial:
    return Polynomial.var(k, size)


def _ptilde_single(k: int, size: int) -> Polynomial:
    if k == 0:
        return Polynomial.one(size)
    return _e_var(k, size).scale(HALF)


def ptilde_pair(i: int, j: int, size: int | None = None) -> Polynomial:
    """P~_{i,j} as a polynomial in e_1..e_size.

    The two-index formula is used for j >= 1; P~_{i,0} is P~_i.
    """
    if i < 0 or j < 0:
        raise PartitionError("indices must be nonnegative")
    size = max(size or 0, i + j, 1)
    if j == 0:
        return _ptilde_single(i, size)
    out = _ptilde_single(i, size) * _ptilde_single(j, size)
    for r in range(1, j):
        term = _ptilde_single(i + r, size) * _ptilde_single(j - r, size)
        out = out + term.scale(2 if r % 2 == 0 else -2)
    last = _ptilde_single(i + j, size)
    return out + (last if j % 2 == 0 else -last)


def pfaffian(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Pfaffian by expansion along the first row."""
    size = len(matrix)
    if size % 2:
        raise PolynomialError("Pfaffian needs an even-size matrix")
    if size == 0:
        raise PolynomialError("empty matrix has no ring context; handle size 0 at the call site")
    for i in range(size):
        if len(matrix[i]) != size:
            raise PolynomialError("matrix is not square")
        for j in range(size):
            if matrix[i][j] != -matrix[j][i]:
                raise PolynomialError("matrix is not antisymmetric")
    return _pf(tuple(tuple(row) for row in matrix), tuple(range(size)))


def _pf(m, idx: tuple[int, ...]) -> Polynomial:
    if len(idx) == 2:
        return m[idx[0]][idx[1]]
    first = idx[0]
    total = None
    for pos in range(1, len(idx)):
        j = idx[pos]
        entry = m[first][j]
        if not entry:
            continue
        rest = idx[1:pos] + idx[pos + 1:]
        term = entry * _pf(m, rest)
        if pos % 2 == 0:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return m[idx[0]][idx[1]] * 0
    return total


@lru_cache(maxsize=None)
def _ptilde_cached(parts: tuple[int, ...]) -> Polynomial:
    size = max(sum(parts), 1)
    ell = len(parts)
    if ell == 0:
        return Polynomial.one(size)
    if ell == 1:
        return ptilde_pair(parts[0], 0, size)
    if ell == 2:
        return ptilde_pair(parts[0], parts[1], size)
    padded = parts + (0,) if ell % 2 else parts
    k = len(padded)
    zero = Polynomial.zero(size)
    mat = [[zero] * k for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            entry = ptilde_pair(padded[a], padded[b], size)
            mat[a][b] = entry
            mat[b][a] = -entry
    return pfaffian(mat)


def ptilde(lam: Partition | Sequence[int]) -> Polynomial:
    """P~_lambda in the e-alphabet, with |lambda| (at least 1) variables."""
    parts = lam.parts if isinstance(lam, Partition) else Partition(tuple(lam)).parts
    return _ptilde_cached(parts)


def pad_alphabet(f: Polynomial, size: int) -> Polynomial:
    return f.with_vars(max(size, f.n))


def specialize(f: Polynomial, images: Sequence[Polynomial], target_vars: int) -> Polynomial:
    """Substitute e_k -> images[k-1]; indices beyond ``images`` map to zero."""
    full = list(images[: f.n]) + [Polynomial.zero(target_vars)] * max(0, f.n - len(images))
    return f.evaluate(full, Polynomial.one(target_vars), Polynomial.zero(target_vars))


@lru_cache(maxsize=None)
def _ptilde_x(parts: tuple[int, ...], n: int) -> Polynomial:
    f = _ptilde_cached(parts)
    return specialize(f, [elementary(k, n) for k in range(1, f.n + 1)], n)


def ptilde_x(lam: Partition | Sequence[int], n: int) -> Polynomial:
    """P~_lambda(x_1, ..., x_n)."""
    parts = lam.parts if isinstance(lam, Partition) else Partition(tuple(lam)).parts
    return _ptilde_x(parts, n)


@lru_cache(maxsize=None)
def q_fun(k: int, m: int) -> Polynomial:
    """Coefficient of t^k in prod_{i<=m} (1 + y_i t)/(1 - y_i t)."""
    if k < 0:
        raise PolynomialError("q_k needs k >= 0")
    # series[d] = coefficient of t^d, built one variable at a time
    series = [Polynomial.one(m)] + [Polynomial.zero(m)] * k
    for i in range(1, m + 1):
        y = Polynomial.var(i, m)
        factor = [Polynomial.one(m)] + [(y ** d).scale(2) for d in range(1, k + 1)]
        series = [
            sum((series[a] * factor[d - a] for a in range(d + 1)), Polynomial.zero(m))
            for d in range(k + 1)
        ]
    return series[k]


def eta(f: Polynomial, m: int) -> Polynomial:
    """The homomorphism e_k -> q_k(y_1..y_m) on the e-alphabet."""
    return specialize(f, [q_fun(k, m) for k in range(1, f.n + 1)], m)


@lru_cache(maxsize=None)
def _schur_p(parts: tuple[int, ...], m: int) -> Polynomial:
    return eta(_ptilde_cached(parts), m)


def schur_p(lam: Partition | Sequence[int], m: int) -> Polynomial:
    """P_lambda(y_1..y_m) as the eta-image of P~_lambda."""
    parts = lam.parts if isinstance(lam, Partition) else Partition(tuple(lam)).parts
    return _schur_p(parts, m)

"""Invariant differential forms on SO(2n)/B.

The algebra is generated by the anticommuting one-forms w_{ij}, wb_{ij}
(lower family, i < j) and w^{pq}, wb^{pq} (upper family, p < q). Their
global order is: lower pairs in lexicographic order, each contributing
w then wb, followed by the upper pairs in the same way. A monomial is a
bitmask over this order, read in increasing bit position, so
Omega_{ij} = w_{ij} ^ wb_{ij} and the top form Omega (the product of all
Omega_{ij} and Omega^{pq}) both have coefficient +1 on their masks.

All curvature formulas are in the skew-diagonal realization, where the
labels (i, j) of the standard realization become (n+1-j, n+1-i).
"""
from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

LOWER, UPPER = "l", "u"
_GEN_RE = re.compile(r"^(w|wb)_(l|u)\((\d+),(\d+)\)$")


class FormError(ValueError):
    pass


@lru_cache(maxsize=None)
def generators(n: int) -> tuple[tuple[str, str, int, int], ...]:
    """(kind, family, a, b) for each generator in canonical order."""
    out = []
    for family in (LOWER, UPPER):
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                out.append(("w", family, a, b))
                out.append(("wb", family, a, b))
    return tuple(out)


@lru_cache(maxsize=None)
def _position(n: int) -> dict[tuple[str, str, int, int], int]:
    return {g: k for k, g in enumerate(generators(n))}


def generator_name(g: tuple[str, str, int, int]) -> str:
    kind, family, a, b = g
    return f"{kind}_{family}({a},{b})"


def _sign(a: int, b: int) -> int:
    """Sign of the shuffle putting the bits of a ^ b (a before b) in order."""
    swaps = 0
    while b:
        low = b & -b
        swaps += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if swaps & 1 else 1


class FormElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, Fraction | int] | None = None):
        self.n = n
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, n: int, terms: dict[int, Fraction]) -> "FormElement":
        f = cls.__new__(cls)
        f.n = n
        f.terms = terms
        return f

    @classmethod
    def zero(cls, n: int) -> "FormElement":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "FormElement":
        return cls._raw(n, {0: Fraction(1)})

    @classmethod
    def scalar(cls, c, n: int) -> "FormElement":
        return cls(n, {0: c})

    @classmethod
    def generator(cls, kind: str, family: str, a: int, b: int, n: int) -> "FormElement":
        """One generator; a > b is allowed and gives the negative (w_{pq} = -w_{qp})."""
        sign = 1
        if a > b:
            a, b, sign = b, a, -1
        if a == b or not (1 <= a and b <= n):
            raise FormError(f"bad generator indices ({a},{b}) for n={n}")
        if kind not in ("w", "wb") or family not in (LOWER, UPPER):
            raise FormError(f"unknown generator {kind}_{family}")
        return cls._raw(n, {1 << _position(n)[(kind, family, a, b)]: Fraction(sign)})

    # -- queries -------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree_set(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def is_homogeneous(self, count: int | None = None) -> bool:
        ds = self.degree_set()
        if not ds:
            return True
        return len(ds) == 1 and (count is None or ds == {count})

    def component(self, count: int) -> "FormElement":
        """Terms with exactly ``count`` generators."""
        return FormElement._raw(self.n, {m: c for m, c in self.terms.items() if m.bit_count() == count})

    def top_mask(self) -> int:
        return (1 << len(generators(self.n))) - 1

    def top_coefficient(self) -> Fraction:
        return self.terms.get(self.top_mask(), Fraction(0))

    def is_multiple_of_top(self) -> bool:
        return all(m == self.top_mask() for m in self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "FormElement") -> None:
        if other.n != self.n:
            raise FormError("forms on different flag varieties")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FormElement.scalar(other, self.n)
        if not isinstance(other, FormElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return FormElement._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return FormElement._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "FormElement":
        c = Fraction(c)
        if not c:
            return FormElement.zero(self.n)
        return FormElement._raw(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, FormElement):
            return NotImplemented
        self._check(other)
        out: dict[int, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                c = ca * cb if _sign(ma, mb) > 0 else -(ca * cb)
                m = ma | mb
                s = out.get(m, 0) + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return FormElement._raw(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    wedge = __mul__

    def __pow__(self, k: int) -> "FormElement":
        out = FormElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FormElement.scalar(other, self.n)
        if not isinstance(other, FormElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- text ----------------------------------------------------------------

    def gens_of(self, mask: int) -> list[str]:
        gens = generators(self.n)
        return [generator_name(gens[k]) for k in range(len(gens)) if mask >> k & 1]

    def sorted_terms(self) -> list[tuple[int, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: (mc[0].bit_count(), mc[0]))

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = " ^ ".join(self.gens_of(m)) or "1"
            parts.append(f"{c}*{body}" if m else str(c))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FormElement({self.n}, {self.to_str()})"

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"gens": self.gens_of(m), "coef": f"{c.numerator}/{c.denominator}"}
                for m, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "FormElement":
        n = int(obj["n"])
        out = cls.zero(n)
        for t in obj["terms"]:
            term = cls.scalar(Fraction(t["coef"]), n)
            for name in t["gens"]:
                mt = _GEN_RE.match(name.replace(" ", ""))
                if not mt:
                    raise FormError(f"cannot parse generator {name!r}")
                kind, family, a, b = mt.group(1), mt.group(2), int(mt.group(3)), int(mt.group(4))
                term = term * cls.generator(kind, family, a, b, n)
            out = out + term
        return out

    @classmethod
    def from_json(cls, text: str) -> "FormElement":
        return cls.from_json_obj(json.loads(text))


# ---------------------------------------------------------------------------
# named forms


def omega_lower(i: int, j: int, n: int) -> FormElement:
    """Omega_{ij} = w_{ij} ^ wb_{ij} (symmetric in i, j)."""
    i, j = min(i, j), max(i, j)
    return FormElement.generator("w", LOWER, i, j, n) * FormElement.generator("wb", LOWER, i, j, n)


def omega_upper(p: int, q: int, n: int) -> FormElement:
    p, q = min(p, q), max(p, q)
    return FormElement.generator("w", UPPER, p, q, n) * FormElement.generator("wb", UPPER, p, q, n)


def top_form(n: int) -> FormElement:
    return FormElement._raw(n, {(1 << len(generators(n))) - 1: Fraction(1)})


@lru_cache(maxsize=None)
def x_form(i: int, n: int) -> FormElement:
    """The Chern form x_i = -c_1(L_i)."""
    if not 1 <= i <= n:
        raise FormError(f"x_{i} out of range for n={n}")
    out = FormElement.zero(n)
    for j in range(1, n + 1):
        if j < i:
            out = out + omega_lower(j, i, n)
        elif j > i:
            out = out - omega_lower(i, j, n)
        if j != i:
            out = out + omega_upper(i, j, n)
    return out


def x_forms(n: int) -> list[FormElement]:
    return [x_form(i, n) for i in range(1, n + 1)]


def _remap(a: int, b: int, n: int) -> tuple[int, int]:
    """(a, b) -> (n+1-b, n+1-a), keeping the antisymmetry sign implicit in order."""
    return n + 1 - b, n + 1 - a


def _gen_remapped(kind: str, family: str, a: int, b: int, n: int) -> FormElement:
    # the label convention w_{ab} = -w_{ba} is applied before relabeling
    if a > b:
        return -_gen_remapped(kind, family, b, a, n)
    a2, b2 = _remap(a, b, n)
    return FormElement.generator(kind, family, a2, b2, n)


@lru_cache(maxsize=None)
def curvature_E(k: int, n: int) -> tuple[tuple[FormElement, ...], ...]:
    """K_{E_k} as a k x k matrix of (1,1)-forms."""
    if not 1 <= k <= n:
        raise FormError(f"E_{k} undefined for n={n}")
    rows = []
    for alpha in range(1, k + 1):
        row = []
        for beta in range(1, k + 1):
            theta = FormElement.zero(n)
            for j in range(k + 1, n + 1):
                theta = theta - _gen_remapped("w", LOWER, alpha, j, n) * _gen_remapped("wb", LOWER, beta, j, n)
            for p in range(1, n + 1):
                if p in (alpha, beta):
                    continue
                theta = theta - _gen_remapped("w", UPPER, p, alpha, n) * _gen_remapped("wb", UPPER, p, beta, n)
            row.append(theta)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def c1_Q(k: int, n: int) -> FormElement:
    """c_1(Q_k) from the three-sum formula, relabeled into the skew-diagonal realization."""
    out = FormElement.zero(n)
    for i in range(1, k):
        out = out + _remapped_omega(LOWER, i, k, n)
    for j in range(k + 1, n + 1):
        out = out - _remapped_omega(LOWER, k, j, n)
    for p in range(1, n + 1):
        if p != k:
            out = out - _remapped_omega(UPPER, p, k, n)
    return out


def _remapped_omega(family: str, a: int, b: int, n: int) -> FormElement:
    a, b = min(a, b), max(a, b)
    a2, b2 = _remap(a, b, n)
    return omega_lower(a2, b2, n) if family == LOWER else omega_upper(a2, b2, n)


def _det(mat: Sequence[Sequence[FormElement]], n: int) -> FormElement:
    """Determinant of a matrix with commuting (even) entries, by Laplace expansion."""
    size = len(mat)
    if size == 0:
        return FormElement.one(n)
    if size == 1:
        return mat[0][0]
    total = FormElement.zero(n)
    for col in range(size):
        entry = mat[0][col]
        if not entry:
            continue
        minor = [row[:col] + row[col + 1:] for row in mat[1:]]
        term = entry * _det(minor, n)
        total = total + term if col % 2 == 0 else total - term
    return total


def _principal_minor_sum(mat, j: int, n: int) -> FormElement:
    import itertools

    total = FormElement.zero(n)
    for rows in itertools.combinations(range(len(mat)), j):
        sub = [[mat[r][c] for c in rows] for r in rows]
        total = total + _det(sub, n)
    return total


BUNDLES = ("E", "E*", "Q", "Q*")


@lru_cache(maxsize=None)
def chern_form(bundle: str, k: int, j: int, n: int) -> FormElement:
    """c_j of E_k, E_k^*, Q_k or Q_k^*."""
    if bundle not in BUNDLES:
        raise FormError(f"unknown bundle {bundle!r}")
    if j == 0:
        return FormElement.one(n)
    if bundle in ("Q", "Q*"):
        if j > 1:
            return FormElement.zero(n)
        c = c1_Q(k, n)
        return c if bundle == "Q" else -c
    if j > k:
        return FormElement.zero(n)
    c = _principal_minor_sum(curvature_E(k, n), j, n)
    return -c if bundle == "E*" and j % 2 else c


def total_chern_form(bundle: str, k: int, n: int) -> list[FormElement]:
    """[c_0, c_1, ..., c_rank]."""
    rank = 1 if bundle in ("Q", "Q*") else k
    return [chern_form(bundle, k, j, n) for j in range(rank + 1)]


def _mat_mul(a, b, n: int):
    size = len(a)
    return tuple(
        tuple(
            sum((a[i][m] * b[m][j] for m in range(size)), FormElement.zero(n))
            for j in range(size)
        )
        for i in range(size)
    )


@lru_cache(maxsize=None)
def power_sum_form(r: int, n: int) -> FormElement:
    """p_r(E_n^*) = (-1)^r Tr(K_{E_n}^r)."""
    if r < 1:
        raise FormError("power sums are indexed from 1")
    k = curvature_E(n, n)
    acc = k
    for _ in range(r - 1):
        acc = _mat_mul(acc, k, n)
    tr = sum((acc[i][i] for i in range(n)), FormElement.zero(n))
    return -tr if r % 2 else tr


def evaluate_at_x_forms(poly, n: int) -> FormElement:
    """Substitute the x_i-forms into a polynomial in n variables."""
    if poly.n != n:
        raise FormError(f"polynomial has {poly.n} variables, expected {n}")
    return poly.evaluate(x_forms(n), FormElement.one(n), FormElement.zero(n))


def volume_factor(n: int) -> Fraction:
    """prod_{k=1}^{n-1} 2/(2k)!, the integral of Omega."""
    out = Fraction(1)
    for k in range(1, n):
        out *= Fraction(2, math.factorial(2 * k))
    return out


def integrate(f: FormElement) -> Fraction:
    """Integral over the flag variety; only the top component contributes."""
    return f.top_coefficient() * volume_factor(f.n)


def point_class_form(n: int) -> FormElement:
    """(1/2^{n-1}) prod_{k=1}^{n-1} c_1(Q_k^*)^{2n-2k}."""
    out = FormElement.one(n)
    for k in range(1, n):
        out = out * chern_form("Q*", k, 1, n) ** (2 * n - 2 * k)
    return out.scale(Fraction(1, 2 ** (n - 1)))

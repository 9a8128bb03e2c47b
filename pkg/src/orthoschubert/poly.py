"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are :class:`fractions.Fraction`. A polynomial in ``n``
variables is a map from exponent tuples of length ``n`` to nonzero
coefficients. Values are treated as immutable.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

DEFAULT_DEGREE_CAP = 64

Exponent = tuple[int, ...]


class PolynomialError(ValueError):
    """Usage error in polynomial arithmetic."""


class DegreeCapError(PolynomialError):
    pass


def is_dyadic(q: Fraction | int) -> bool:
    """True when the reduced denominator is a power of two."""
    d = Fraction(q).denominator
    return d & (d - 1) == 0


def grevlex_key(exp: Exponent) -> tuple:
    """Sort key; larger key means larger in graded reverse-lexicographic order."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise PolynomialError(f"coefficient {c!r} is not an exact rational")


class Polynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, Fraction | int] | None = None):
        if n < 0:
            raise PolynomialError("number of variables must be nonnegative")
        self.n = n
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n or any(e < 0 for e in exp):
                    raise PolynomialError(f"bad exponent {exp} for {n} variables")
                c = _as_fraction(c)
                if c:
                    clean[exp] = clean.get(exp, Fraction(0)) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponent, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, c, n: int) -> "Polynomial":
        c = _as_fraction(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(1, n)

    @classmethod
    def var(cls, i: int, n: int) -> "Polynomial":
        """The variable x_i, 1-based."""
        if not 1 <= i <= n:
            raise PolynomialError(f"variable index {i} out of range for {n} variables")
        exp = [0] * n
        exp[i - 1] = 1
        return cls._raw(n, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef=1) -> "Polynomial":
        return cls(len(exp), {tuple(exp): coef})

    # -- basic queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical (graded reverse-lexicographic, descending) order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def coefficients_dyadic(self) -> bool:
        return all(is_dyadic(c) for c in self.terms.values())

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise PolynomialError(f"mismatched number of variables: {self.n} vs {other.n}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def mul(self, other: "Polynomial", degree_cap: int = DEFAULT_DEGREE_CAP) -> "Polynomial":
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.n)
        if self.degree() + other.degree() > degree_cap:
            raise DegreeCapError(
                f"product degree {self.degree() + other.degree()} exceeds cap {degree_cap}"
            )
        out: dict[Exponent, Fraction] = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return Polynomial._raw(self.n, {e: c for e, c in out.items() if c})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return self.mul(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise PolynomialError("negative power")
        result = Polynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    # -- substitutions ---------------------------------------------------------

    def negate_vars(self) -> "Polynomial":
        """x_i -> -x_i for every i."""
        return Polynomial._raw(
            self.n, {e: (-c if sum(e) % 2 else c) for e, c in self.terms.items()}
        )

    def permute_vars(self, perm: Sequence[int]) -> "Polynomial":
        """Send x_i to x_{perm[i-1]} (perm is 1-based one-line notation)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, a in enumerate(e):
                new[perm[i] - 1] += a
            out[tuple(new)] = c
        return Polynomial._raw(self.n, out)

    def set_zero(self, indices: Iterable[int]) -> "Polynomial":
        """Substitute x_i = 0 for the given 1-based indices."""
        idx = [i - 1 for i in indices]
        return Polynomial._raw(
            self.n, {e: c for e, c in self.terms.items() if all(e[i] == 0 for i in idx)}
        )

    def with_vars(self, m: int) -> "Polynomial":
        """Re-embed into m variables (dropping trailing variables that do not occur)."""
        out = {}
        for e, c in self.terms.items():
            if m < self.n and any(e[m:]):
                raise PolynomialError(f"polynomial uses variables beyond x_{m}")
            out[tuple(e[:m]) + (0,) * max(0, m - self.n)] = c
        return Polynomial._raw(m, out)

    def evaluate(self, values: Sequence, one, zero=None):
        """Evaluate in any commutative ring given images of the variables.

        ``one`` is the unit of the target ring; products are formed with ``*``
        and scalars applied as ``coef * element``.
        """
        cache: dict[tuple[int, int], object] = {}

        def power(i: int, k: int):
            key = (i, k)
            if key not in cache:
                cache[key] = one if k == 0 else power(i, k - 1) * values[i]
            return cache[key]

        total = zero
        for e, c in self.terms.items():
            term = one
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            term = c * term
            total = term if total is None else total + term
        if total is None:
            return 0 * one
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute polynomials (all in the same ring) for the variables."""
        if len(images) != self.n:
            raise PolynomialError("need one image per variable")
        m = images[0].n if images else 0
        return self.evaluate(list(images), Polynomial.one(m), Polynomial.zero(m))

    # -- divided differences ---------------------------------------------------

    def swap_vars(self, i: int, j: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            out[tuple(e)] = c
        return Polynomial._raw(self.n, out)

    def act(self, index: int) -> "Polynomial":
        """Action of s_index; index 0 stands for s_box: (x1, x2) -> (-x2, -x1)."""
        if index == 0:
            if self.n < 2:
                raise PolynomialError("s_box needs at least two variables")
            out = {}
            for e, c in self.terms.items():
                new = (e[1], e[0]) + e[2:]
                out[new] = -c if (e[0] + e[1]) % 2 else c
            return Polynomial._raw(self.n, out)
        if not 1 <= index < self.n:
            raise PolynomialError(f"generator s_{index} out of range for {self.n} variables")
        return self.swap_vars(index, index + 1)

    # -- formatting --------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {self.to_str()})"

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.n)]
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Polynomial":
        try:
            n = int(obj["n"])
            terms: dict[Exponent, Fraction] = {}
            for t in obj["terms"]:
                exp = tuple(int(a) for a in t["exp"])
                c = Fraction(str(t["coef"]))
                terms[exp] = terms.get(exp, Fraction(0)) + c
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise PolynomialError(f"malformed polynomial JSON: {exc}") from exc
        return cls(n, terms)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PolynomialError(f"malformed polynomial JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def _dd_pair(a: int, b: int) -> list[tuple[int, int, int]]:
    """(u^a v^b - u^b v^a) / (u - v) as a list of (exp_u, exp_v, sign)."""
    if a == b:
        return []
    if a > b:
        return [(a - 1 - k, b + k, 1) for k in range(a - b)]
    return [(b - 1 - k, a + k, -1) for k in range(b - a)]


def divided_difference(f: Polynomial, index: int, check: bool = False) -> Polynomial:
    """Apply d_index; index 0 is d_box = (f - s_box f)/(x1 + x2).

    The quotient is computed monomial by monomial from the closed form of
    (u^a v^b - u^b v^a)/(u - v); with ``check=True`` the result is multiplied
    back against the numerator.
    """
    n = f.n
    if index == 0:
        if n < 2:
            raise PolynomialError("d_box needs at least two variables")
        i, j = 0, 1
    else:
        if not 1 <= index < n:
            raise PolynomialError(f"d_{index} out of range for {n} variables")
        i, j = index - 1, index
    out: dict[Exponent, Fraction] = {}
    get = out.get
    for e, c in f.terms.items():
        a, b = e[i], e[j]
        if a == b:
            continue
        if index == 0:
            # in the coordinates (x1, y2 = -x2), s_box swaps x1 and y2
            c = -c if b % 2 else c
        for ea, eb, sign in _dd_pair(a, b):
            new = list(e)
            new[i], new[j] = ea, eb
            coef = c if sign > 0 else -c
            if index == 0 and eb % 2:
                coef = -coef
            key = tuple(new)
            out[key] = get(key, 0) + coef
    result = Polynomial._raw(n, {k: v for k, v in out.items() if v})
    if check:
        numerator = f - f.act(index)
        denom = Polynomial.var(1, n) + Polynomial.var(2, n) if index == 0 else (
            Polynomial.var(index, n) - Polynomial.var(index + 1, n)
        )
        if result * denom != numerator:
            raise ArithmeticError("divided difference failed exactness check")
    return result


def divided_difference_word(f: Polynomial, word: Sequence[int], validate: Callable | None = None) -> Polynomial:
    """Compose d_{a_1} o ... o d_{a_l}; the last letter acts first.

    ``validate`` (optional) is called with the word and must raise on a
    non-reduced word.
    """
    if validate is not None:
        validate(word)
    for a in reversed(list(word)):
        if not f:
            return f
        f = divided_difference(f, a)
    return f


def poly_sum(polys: Iterable[Polynomial], n: int) -> Polynomial:
    out: dict[Exponent, Fraction] = {}
    get = out.get
    for p in polys:
        for e, c in p.terms.items():
            out[e] = get(e, 0) + c
    return Polynomial._raw(n, {e: c for e, c in out.items() if c})


def linear_combination(pairs: Iterable[tuple[Fraction | int, Polynomial]], n: int) -> Polynomial:
    out: dict[Exponent, Fraction] = {}
    get = out.get
    for c, p in pairs:
        if not c:
            continue
        for e, v in p.terms.items():
            out[e] = get(e, 0) + c * v
    return Polynomial._raw(n, {e: c for e, c in out.items() if c})


def monomials_of_degree(n: int, d: int) -> list[Exponent]:
    """All exponent vectors of total degree d, in descending grevlex order."""
    out: list[Exponent] = []

    def rec(prefix: list[int], left: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for k in range(left, -1, -1):
            rec(prefix + [k], left - k, slots - 1)

    if n == 0:
        return [()] if d == 0 else []
    rec([], d, n)
    out.sort(key=grevlex_key, reverse=True)
    return out

"""Type A Schubert polynomials of Lascoux and Schutzenberger."""
from __future__ import annotations

from functools import lru_cache

from .poly import Polynomial, divided_difference
from .weyl import PermutationA, WeylError


def staircase(n: int) -> Polynomial:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}."""
    return Polynomial.monomial(tuple(range(n - 1, -1, -1)))


@lru_cache(maxsize=None)
def _schubert(entries: tuple[int, ...]) -> Polynomial:
    n = len(entries)
    for i in range(n - 1):
        if entries[i] < entries[i + 1]:
            # S_w = d_i S_{w s_i} whenever w s_i is longer
            up = list(entries)
            up[i], up[i + 1] = up[i + 1], up[i]
            return divided_difference(_schubert(tuple(up)), i + 1)
    return staircase(n)


def schubert_a(w: PermutationA, n: int | None = None) -> Polynomial:
    """The Schubert polynomial of w in n variables (n defaults to the size of w)."""
    if n is None:
        n = w.n
    if n < w.n:
        raise WeylError(f"permutation of size {w.n} does not live in S_{n}")
    if n > w.n:
        w = w.embed(n)
    return _schubert(w.entries)


def stability_check(w: PermutationA, n: int, n_big: int) -> bool:
    """Compare S_w in n variables with S_{i(w)} in n_big variables, x_{n+1..} = 0."""
    if n_big <= n:
        raise WeylError("stability check needs a larger ambient size")
    big = schubert_a(w.embed(n_big), n_big)
    restricted = big.set_zero(range(n + 1, n_big + 1))
    small = schubert_a(w, n)
    return restricted.with_vars(n) == small

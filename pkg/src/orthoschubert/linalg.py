"""Exact sparse elimination over the rationals.

Vectors are dicts from hashable keys (monomials) to Fractions. A
:class:`LeadingTermBasis` keeps every stored row with a distinct leading key
under a fixed key order, together with the combination of the original
generators that produced it, so a target vector can be written in the
generators by repeatedly cancelling its leading key.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Mapping, Sequence

Vector = dict


class SingularSystemError(ArithmeticError):
    pass


class NotInSpanError(ArithmeticError):
    def __init__(self, residual: Mapping):
        super().__init__(f"vector is not in the span; residual has {len(residual)} terms")
        self.residual = dict(residual)


def _axpy(y: dict, a: Fraction, x: Mapping) -> None:
    """y += a * x in place, dropping zeros."""
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class LeadingTermBasis:
    def __init__(self, order: Callable[[Hashable], object]):
        self.order = order
        self._rows: dict[Hashable, tuple[dict, dict]] = {}
        self.size = 0

    def _lead(self, v: Mapping) -> Hashable:
        return max(v, key=self.order)

    def add(self, vector: Mapping, label: Hashable | None = None) -> None:
        """Insert a generator; raises when it depends on earlier ones."""
        label = self.size if label is None else label
        v = {k: Fraction(c) for k, c in vector.items() if c}
        comb = {label: Fraction(1)}
        while v:
            lead = self._lead(v)
            row = self._rows.get(lead)
            if row is None:
                break
            rvec, rcomb = row
            a = -v[lead] / rvec[lead]
            _axpy(v, a, rvec)
            _axpy(comb, a, rcomb)
        if not v:
            raise SingularSystemError(f"generator {label!r} is linearly dependent on earlier ones")
        self._rows[self._lead(v)] = (v, comb)
        self.size += 1

    def express(self, vector: Mapping, strict: bool = True) -> dict:
        """Coefficients c with sum c[label] * generator[label] == vector."""
        v = {k: Fraction(c) for k, c in vector.items() if c}
        out: dict = {}
        while v:
            lead = self._lead(v)
            row = self._rows.get(lead)
            if row is None:
                if strict:
                    raise NotInSpanError(v)
                break
            rvec, rcomb = row
            a = v[lead] / rvec[lead]
            _axpy(v, -a, rvec)
            _axpy(out, a, rcomb)
        return out

    def rank(self) -> int:
        return self.size


def rank(vectors: Sequence[Mapping], order: Callable[[Hashable], object] = repr) -> int:
    """Rank of a list of sparse vectors."""
    basis = LeadingTermBasis(order)
    r = 0
    for k, vec in enumerate(vectors):
        try:
            basis.add(vec, k)
            r += 1
        except SingularSystemError:
            pass
    return r


def solve_square(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve an exact square (or overdetermined consistent) dense system by Gauss-Jordan."""
    rows = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(matrix, rhs)]
    if not rows:
        return []
    ncols = len(rows[0]) - 1
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        p = rows[pivot_row][col]
        rows[pivot_row] = [x / p for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    if len(pivots) < ncols:
        raise SingularSystemError("system does not determine all unknowns")
    for r in range(pivot_row, len(rows)):
        if rows[r][-1]:
            raise SingularSystemError("inconsistent system")
    out = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        out[col] = rows[r][-1]
    return out

"""Kraskiewicz-Lam tableaux, type D Stanley coefficients and the
Billey-Haiman coefficients f^w_{lambda,pi}.

A tableau is determined by its row word: the top row t_1 must be a
maximum-length unimodal subsequence of the whole word and is its suffix,
and the rows below are found the same way on the remaining prefix. So
tableaux for w correspond to the distinct flattened reduced words of w
whose greedy row decomposition has unimodal rows. The decomposition and
the m statistic run in :mod:`._kernels` over all words at once.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .symfun import Partition
from .weyl import BOX, PermutationA, SignedPermutation, WeylError, all_permutations

log = logging.getLogger(__name__)

TABLEAU_LENGTH_BOUND = 20

Word = tuple[int, ...]


def is_unimodal(seq: Sequence[int]) -> bool:
    a = np.asarray(seq, dtype=np.int64)
    return bool(_kernels.is_unimodal(a, 0, a.shape[0]))


@dataclass(frozen=True)
class KLTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    m: int

    def row_word(self) -> Word:
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def to_json_obj(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


@lru_cache(maxsize=None)
def _flat_words(entries: tuple[int, ...]) -> frozenset[Word]:
    w = SignedPermutation(entries)
    if w.length() == 0:
        return frozenset({()})
    out = set()
    for a in w.right_descents():
        letter = 1 if a == BOX else a
        for prefix in _flat_words(w.right_act(a).entries):
            out.add(prefix + (letter,))
    return frozenset(out)


def flattened_words(w: SignedPermutation, bound: int = TABLEAU_LENGTH_BOUND) -> list[Word]:
    """Distinct flattened reduced words of w, sorted."""
    if w.length() > bound:
        raise WeylError(f"length {w.length()} exceeds tableau enumeration bound {bound}")
    return sorted(_flat_words(w.entries))


def _split_rows(word: Word, shape: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    rows = []
    stop = len(word)
    for length in shape:
        rows.append(tuple(word[stop - length: stop]))
        stop -= length
    return tuple(rows)


@lru_cache(maxsize=None)
def _tableaux(entries: tuple[int, ...], bound: int) -> tuple[KLTableau, ...]:
    words = flattened_words(SignedPermutation(entries), bound)
    if words == [()]:
        return (KLTableau(Partition(()), (), 0),)
    mat, lengths = _kernels.as_word_matrix(words)
    shapes, nrows, mvals = _kernels.kl_batch(mat, lengths)
    out = []
    for k, word in enumerate(words):
        r = int(nrows[k])
        if r < 0:
            continue
        shape = tuple(int(x) for x in shapes[k, :r])
        out.append(KLTableau(Partition(shape), _split_rows(word, shape), int(mvals[k])))
    out.sort(key=lambda t: (t.shape.parts, t.rows), reverse=True)
    return tuple(out)


def all_kl_tableaux(w: SignedPermutation, bound: int = TABLEAU_LENGTH_BOUND) -> list[KLTableau]:
    """Every Kraskiewicz-Lam tableau for w, of any shape."""
    return list(_tableaux(w.entries, bound))


def kl_tableaux(w: SignedPermutation, lam: Partition | Sequence[int],
                bound: int = TABLEAU_LENGTH_BOUND) -> list[KLTableau]:
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if lam.weight != w.length():
        log.info("no tableaux: |%s| = %d but l(%s) = %d", lam, lam.weight, w, w.length())
        return []
    return [t for t in _tableaux(w.entries, bound) if t.shape == lam]


def m_stat(t: KLTableau | Sequence[Sequence[int]]) -> int:
    """m(T) recomputed from the rows (top row first)."""
    rows = t.rows if isinstance(t, KLTableau) else tuple(tuple(r) for r in t)
    word: list[int] = []
    for row in reversed(rows):
        word.extend(row)
    arr = np.asarray(word, dtype=np.int64)
    return int(_kernels.m_statistic_py(arr, arr.shape[0], len(rows)))


@lru_cache(maxsize=None)
def _stanley_table(entries: tuple[int, ...]) -> dict[Partition, int]:
    table: dict[Partition, int] = {}
    for t in _tableaux(entries, TABLEAU_LENGTH_BOUND):
        table[t.shape] = table.get(t.shape, 0) + (1 << t.m)
    return table


def stanley_expansion(u: SignedPermutation) -> dict[Partition, int]:
    """lambda -> d^u_lambda for every lambda with a tableau."""
    return dict(_stanley_table(u.entries))


def stanley_coeff(u: SignedPermutation, lam: Partition | Sequence[int]) -> int:
    """d^u_lambda = sum of 2^m(T) over tableaux for u of shape lambda."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if lam.weight != u.length():
        return 0
    return _stanley_table(u.entries).get(lam, 0)


def _left_factor(w: SignedPermutation, pi: PermutationA) -> SignedPermutation | None:
    if pi.n != w.n:
        pi = pi.embed(w.n) if pi.n < w.n else None
        if pi is None:
            raise WeylError("permutation larger than the signed permutation")
    u = w * pi.inverse().signed()
    if u.length() != w.length() - pi.length():
        return None
    return u


def f_coeff(w: SignedPermutation, lam: Partition | Sequence[int], pi: PermutationA) -> int:
    u = _left_factor(w, pi)
    if u is None:
        return 0
    return stanley_coeff(u, lam)


@dataclass(frozen=True)
class BHExpansion:
    element: SignedPermutation
    coeffs: dict[tuple[Partition, PermutationA], int]

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][1].length(), kv[0][1].entries, kv[0][0].parts))

    def to_json_obj(self) -> dict:
        return {
            "w": str(self.element),
            "terms": [
                {"lambda": list(lam.parts), "pi": str(pi), "f": c} for (lam, pi), c in self.items()
            ],
        }


@lru_cache(maxsize=None)
def _bh(entries: tuple[int, ...]) -> tuple[tuple[tuple[Partition, PermutationA], int], ...]:
    w = SignedPermutation(entries)
    out = []
    for pi in all_permutations(w.n):
        u = _left_factor(w, pi)
        if u is None:
            continue
        for lam, d in _stanley_table(u.entries).items():
            if not lam.is_strict():
                raise AssertionError(f"tableau of non-strict shape {lam} for {u}")
            out.append(((lam, pi), d))
    return tuple(out)


def bh_expansion(w: SignedPermutation) -> BHExpansion:
    return BHExpansion(w, dict(_bh(w.entries)))

"""Integer kernels for the combinatorial hot loops.

Every kernel has a numba ``@njit`` version and a pure Python/numpy version
with identical semantics. The jitted path is used when numba imports and
the environment variable ``ORTHOSCHUBERT_NUMBA`` is not ``"0"``.
"""
from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "ORTHOSCHUBERT_NUMBA"


def _want_numba() -> bool:
    return os.environ.get(ENV_FLAG, "1").strip().lower() not in ("0", "false", "no", "off")


# ---------------------------------------------------------------------------
# pure-python reference implementations

def signed_length_py(w: np.ndarray) -> int:
    n = w.shape[0]
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                total += 1
            if w[i] + w[j] < 0:
                total += 1
    return total


def max_unimodal_py(a: np.ndarray, start: int, stop: int) -> int:
    """Longest unimodal subsequence of ``a[start:stop]``."""
    m = stop - start
    if m <= 0:
        return 0
    dec = [1] * m
    inc = [1] * m
    for i in range(m):
        ai = a[start + i]
        for j in range(i):
            if a[start + j] > ai and dec[j] + 1 > dec[i]:
                dec[i] = dec[j] + 1
    for i in range(m - 1, -1, -1):
        ai = a[start + i]
        for j in range(i + 1, m):
            if a[start + j] > ai and inc[j] + 1 > inc[i]:
                inc[i] = inc[j] + 1
    best = 0
    for i in range(m):
        v = dec[i] + inc[i] - 1
        if v > best:
            best = v
    # the valley may be a repeated 1
    for i in range(m):
        if a[start + i] != 1:
            continue
        for j in range(i + 1, m):
            if a[start + j] == 1 and dec[i] + inc[j] > best:
                best = dec[i] + inc[j]
    return best


def is_unimodal_py(a: np.ndarray, start: int, stop: int) -> bool:
    m = stop - start
    if m <= 1:
        return True
    k = 0
    while k + 1 < m and a[start + k] > a[start + k + 1]:
        k += 1
    if k + 1 < m and a[start + k] == a[start + k + 1]:
        if a[start + k] != 1:
            return False
        k += 1
    while k + 1 < m:
        if a[start + k] >= a[start + k + 1]:
            return False
        k += 1
    return True


def kl_shape_py(word: np.ndarray, length: int, out: np.ndarray) -> int:
    """Greedy row decomposition of a row word ``t_r ... t_1``.

    Writes row lengths (top row first) into ``out`` and returns the number
    of rows, or -1 when some row fails to be unimodal.
    """
    stop = length
    rows = 0
    while stop > 0:
        u = max_unimodal_py(word, 0, stop)
        if not is_unimodal_py(word, stop - u, stop):
            return -1
        out[rows] = u
        rows += 1
        stop -= u
    return rows


def m_statistic_py(word: np.ndarray, length: int, rows: int) -> int:
    size = 2
    for i in range(length):
        if word[i] + 1 > size:
            size = word[i] + 1
    perm = list(range(size + 1))
    seen = {1}
    for i in range(length):
        a = word[i]
        perm[a], perm[a + 1] = perm[a + 1], perm[a]
        seen.add(perm[1])
    return rows + 1 - len(seen)


def kl_batch_py(words: np.ndarray, lengths: np.ndarray):
    count, width = words.shape
    shapes = np.zeros((count, max(width, 1)), dtype=np.int64)
    nrows = np.zeros(count, dtype=np.int64)
    mvals = np.zeros(count, dtype=np.int64)
    for k in range(count):
        r = kl_shape_py(words[k], lengths[k], shapes[k])
        nrows[k] = r
        if r >= 0:
            mvals[k] = m_statistic_py(words[k], lengths[k], r)
    return shapes, nrows, mvals


def signed_length_batch_py(perms: np.ndarray) -> np.ndarray:
    out = np.zeros(perms.shape[0], dtype=np.int64)
    for k in range(perms.shape[0]):
        out[k] = signed_length_py(perms[k])
    return out


# ---------------------------------------------------------------------------
# numba versions

_NUMBA_OK = False
if _want_numba():
    try:
        from numba import njit
        _NUMBA_OK = True
    except ImportError:  # pragma: no cover - numba is optional
        _NUMBA_OK = False

if _NUMBA_OK:

    @njit(cache=True)
    def _signed_length_nb(w):
        n = w.shape[0]
        total = 0
        for i in range(n):
            for j in range(i + 1, n):
                if w[i] > w[j]:
                    total += 1
                if w[i] + w[j] < 0:
                    total += 1
        return total

    @njit(cache=True)
    def _max_unimodal_nb(a, start, stop):
        m = stop - start
        if m <= 0:
            return 0
        dec = np.ones(m, dtype=np.int64)
        inc = np.ones(m, dtype=np.int64)
        for i in range(m):
            ai = a[start + i]
            for j in range(i):
                if a[start + j] > ai and dec[j] + 1 > dec[i]:
                    dec[i] = dec[j] + 1
        for i in range(m - 1, -1, -1):
            ai = a[start + i]
            for j in range(i + 1, m):
                if a[start + j] > ai and inc[j] + 1 > inc[i]:
                    inc[i] = inc[j] + 1
        best = 0
        for i in range(m):
            v = dec[i] + inc[i] - 1
            if v > best:
                best = v
        for i in range(m):
            if a[start + i] != 1:
                continue
            for j in range(i + 1, m):
                if a[start + j] == 1 and dec[i] + inc[j] > best:
                    best = dec[i] + inc[j]
        return best

    @njit(cache=True)
    def _is_unimodal_nb(a, start, stop):
        m = stop - start
        if m <= 1:
            return True
        k = 0
        while k + 1 < m and a[start + k] > a[start + k + 1]:
            k += 1
        if k + 1 < m and a[start + k] == a[start + k + 1]:
            if a[start + k] != 1:
                return False
            k += 1
        while k + 1 < m:
            if a[start + k] >= a[start + k + 1]:
                return False
            k += 1
        return True

    @njit(cache=True)
    def _kl_shape_nb(word, length, out):
        stop = length
        rows = 0
        while stop > 0:
            u = _max_unimodal_nb(word, 0, stop)
            if not _is_unimodal_nb(word, stop - u, stop):
                return -1
            out[rows] = u
            rows += 1
            stop -= u
        return rows

    @njit(cache=True)
    def _m_statistic_nb(word, length, rows):
        size = 2
        for i in range(length):
            if word[i] + 1 > size:
                size = word[i] + 1
        perm = np.arange(size + 1)
        seen = np.zeros(size + 1, dtype=np.bool_)
        seen[1] = True
        distinct = 1
        for i in range(length):
            a = word[i]
            t = perm[a]
            perm[a] = perm[a + 1]
            perm[a + 1] = t
            v = perm[1]
            if not seen[v]:
                seen[v] = True
                distinct += 1
        return rows + 1 - distinct

    @njit(cache=True)
    def _kl_batch_nb(words, lengths):
        count, width = words.shape
        shapes = np.zeros((count, max(width, 1)), dtype=np.int64)
        nrows = np.zeros(count, dtype=np.int64)
        mvals = np.zeros(count, dtype=np.int64)
        for k in range(count):
            r = _kl_shape_nb(words[k], lengths[k], shapes[k])
            nrows[k] = r
            if r >= 0:
                mvals[k] = _m_statistic_nb(words[k], lengths[k], r)
        return shapes, nrows, mvals

    @njit(cache=True)
    def _signed_length_batch_nb(perms):
        out = np.zeros(perms.shape[0], dtype=np.int64)
        for k in range(perms.shape[0]):
            out[k] = _signed_length_nb(perms[k])
        return out


def using_numba() -> bool:
    return _NUMBA_OK


if _NUMBA_OK:
    kl_batch = _kl_batch_nb
    signed_length_batch = _signed_length_batch_nb
    max_unimodal = _max_unimodal_nb
    is_unimodal = _is_unimodal_nb
else:
    kl_batch = kl_batch_py
    signed_length_batch = signed_length_batch_py
    max_unimodal = max_unimodal_py
    is_unimodal = is_unimodal_py


def as_word_matrix(words) -> tuple[np.ndarray, np.ndarray]:
    """Pack a list of integer sequences into a padded int64 matrix."""
    words = list(words)
    width = max((len(w) for w in words), default=0)
    mat = np.zeros((len(words), max(width, 1)), dtype=np.int64)
    lengths = np.zeros(len(words), dtype=np.int64)
    for k, w in enumerate(words):
        lengths[k] = len(w)
        if w:
            mat[k, : len(w)] = w
    return mat, lengths

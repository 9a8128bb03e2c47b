"""Symmetric groups S_n and the type D Weyl groups W~_n.

Signed permutations are written in one-line notation ``(w_1, ..., w_n)``
with negative integers for barred entries. Products are composition of
maps: ``(u * v)(i) = u(v(i))``, so right multiplication by a generator acts
on positions. Words are tuples over ``{0, 1, ..., n-1}`` where ``0`` is the
letter s_box.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels

BOX = 0
DEFAULT_WORD_BOUND = 12

Word = tuple[int, ...]


class WeylError(ValueError):
    pass


@dataclass(frozen=True)
class SignedPermutation:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if sorted(abs(a) for a in entries) != list(range(1, n + 1)):
            raise WeylError(f"{entries} is not a signed permutation")
        if sum(1 for a in entries if a < 0) % 2:
            raise WeylError(f"{entries} has an odd number of sign changes")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        try:
            return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))
        except ValueError as exc:
            raise WeylError(f"cannot parse signed permutation {text!r}: {exc}") from exc

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)

    def __call__(self, i: int) -> int:
        v = self.entries[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other):
        if isinstance(other, SignedPermutation):
            if other.n != self.n:
                raise WeylError("size mismatch in product")
            return SignedPermutation(tuple(self(v) for v in other.entries))
        return NotImplemented

    def inverse(self) -> "SignedPermutation":
        out = [0] * self.n
        for i, v in enumerate(self.entries, start=1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(out))

    def right_act(self, a: int) -> "SignedPermutation":
        """w * s_a."""
        e = list(self.entries)
        if a == BOX:
            if self.n < 2:
                raise WeylError("s_box needs n >= 2")
            e[0], e[1] = -e[1], -e[0]
        else:
            if not 1 <= a < self.n:
                raise WeylError(f"generator s_{a} out of range for n={self.n}")
            e[a - 1], e[a] = e[a], e[a - 1]
        return SignedPermutation(tuple(e))

    def length(self) -> int:
        return signed_length(self.entries)

    def has_right_descent(self, a: int) -> bool:
        e = self.entries
        if a == BOX:
            return e[0] + e[1] < 0
        return e[a - 1] > e[a]

    def right_descents(self) -> list[int]:
        letters = [BOX] + list(range(1, self.n)) if self.n >= 2 else []
        return [a for a in letters if self.has_right_descent(a)]

    def is_unsigned(self) -> bool:
        return all(a > 0 for a in self.entries)

    def to_permutation(self) -> "PermutationA":
        if not self.is_unsigned():
            raise WeylError(f"{self} is not in S_n")
        return PermutationA(self.entries)

    def embed(self, m: int) -> "SignedPermutation":
        """Natural inclusion into W~_m using the first n components."""
        if m < self.n:
            raise WeylError("cannot embed into a smaller group")
        return SignedPermutation(self.entries + tuple(range(self.n + 1, m + 1)))


@dataclass(frozen=True)
class PermutationA:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise WeylError(f"{entries} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "PermutationA":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "PermutationA":
        text = text.strip()
        try:
            if "," in text:
                return cls(tuple(int(t) for t in text.split(",") if t.strip()))
            return cls(tuple(int(ch) for ch in text))
        except ValueError as exc:
            raise WeylError(f"cannot parse permutation {text!r}: {exc}") from exc

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(str(a) for a in self.entries)
        return ",".join(str(a) for a in self.entries)

    def __call__(self, i: int) -> int:
        return self.entries[i - 1]

    def __mul__(self, other):
        if isinstance(other, PermutationA):
            if other.n != self.n:
                raise WeylError("size mismatch in product")
            return PermutationA(tuple(self(v) for v in other.entries))
        return NotImplemented

    def inverse(self) -> "PermutationA":
        out = [0] * self.n
        for i, v in enumerate(self.entries, start=1):
            out[v - 1] = i
        return PermutationA(tuple(out))

    def length(self) -> int:
        e = self.entries
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if e[i] > e[j])

    def right_act(self, a: int) -> "PermutationA":
        e = list(self.entries)
        e[a - 1], e[a] = e[a], e[a - 1]
        return PermutationA(tuple(e))

    def signed(self) -> SignedPermutation:
        return SignedPermutation(self.entries)

    def embed(self, m: int) -> "PermutationA":
        return PermutationA(self.entries + tuple(range(self.n + 1, m + 1)))

    def reduced_word(self) -> Word:
        """Lexicographically least reduced word."""
        return canonical_reduced_word(self.signed())


def signed_length(entries: Sequence[int]) -> int:
    """inv(w) + #{i<j : w_i + w_j < 0}."""
    n = len(entries)
    total = 0
    for i in range(n):
        wi = entries[i]
        for j in range(i + 1, n):
            wj = entries[j]
            if wi > wj:
                total += 1
            if wi + wj < 0:
                total += 1
    return total


def compose(u: SignedPermutation, v: SignedPermutation | Sequence[int]) -> SignedPermutation:
    """u * v, where v may be a word applied letter by letter on the right."""
    if isinstance(v, SignedPermutation):
        return u * v
    w = u
    for a in v:
        w = w.right_act(a)
    return w


def evaluate_word(word: Sequence[int], n: int) -> SignedPermutation:
    return compose(SignedPermutation.identity(n), word)


def validate_word(word: Sequence[int], n: int) -> None:
    for a in word:
        if not (a == BOX and n >= 2) and not 1 <= a < n:
            raise WeylError(f"letter {a} out of range for n={n}")


def is_reduced(word: Sequence[int], n: int) -> bool:
    validate_word(word, n)
    return evaluate_word(word, n).length() == len(word)


def require_reduced(word: Sequence[int], n: int) -> None:
    if not is_reduced(word, n):
        w = evaluate_word(word, n)
        raise WeylError(
            f"word {format_word(word)} is not reduced: it evaluates to {w} of length {w.length()}"
        )


@lru_cache(maxsize=None)
def _reduced_words(entries: tuple[int, ...]) -> tuple[Word, ...]:
    w = SignedPermutation(entries)
    if w.length() == 0:
        return ((),)
    out: list[Word] = []
    for a in w.right_descents():
        for prefix in _reduced_words(w.right_act(a).entries):
            out.append(prefix + (a,))
    return tuple(sorted(out))


def reduced_words(w: SignedPermutation, bound: int = DEFAULT_WORD_BOUND) -> list[Word]:
    """All reduced words of w, sorted lexicographically (box < 1 < 2 < ...)."""
    if w.length() > bound:
        raise WeylError(f"length {w.length()} exceeds reduced-word enumeration bound {bound}")
    return list(_reduced_words(w.entries))


@lru_cache(maxsize=None)
def _canonical(entries: tuple[int, ...]) -> Word:
    # greedy from the left: the first letter is the least left descent
    w = SignedPermutation(entries)
    if w.length() == 0:
        return ()
    winv = w.inverse()
    for a in [BOX] + list(range(1, w.n)):
        if winv.has_right_descent(a):
            return (a,) + _canonical(winv.right_act(a).inverse().entries)
    raise AssertionError("nonidentity element without descents")


def canonical_reduced_word(w: SignedPermutation) -> Word:
    """Lexicographically least reduced word (box < 1 < 2 < ...)."""
    return _canonical(w.entries)


def flatten(word: Sequence[int]) -> Word:
    return tuple(1 if a == BOX else a for a in word)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(a) for a in word)


def parse_word(text: str) -> Word:
    try:
        return tuple(int(t) for t in text.split())
    except ValueError as exc:
        raise WeylError(f"cannot parse word {text!r}") from exc


def longest_element(n: int) -> SignedPermutation:
    if n < 2:
        raise WeylError("n must be at least 2")
    if n % 2 == 0:
        return SignedPermutation(tuple(-i for i in range(1, n + 1)))
    return SignedPermutation((1,) + tuple(-i for i in range(2, n + 1)))


def longest_element_A(n: int) -> PermutationA:
    return PermutationA(tuple(range(n, 0, -1)))


def max_grassmannian(parts: Sequence[int], n: int) -> SignedPermutation:
    """The maximal Grassmannian element w_lambda of W~_n for strict lambda in F_{n-1}."""
    parts = tuple(parts)
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)) or any(p <= 0 for p in parts):
        raise WeylError(f"{parts} is not a strict partition")
    if parts and parts[0] > n - 1:
        raise WeylError(f"largest part of {parts} exceeds n-1={n - 1}")
    ell = len(parts)
    used = {1} | {p + 1 for p in parts}
    mu_increasing = [i for i in range(1, n + 1) if i not in used]
    hat_one = 1 if ell % 2 == 0 else -1
    return SignedPermutation(tuple(-(p + 1) for p in parts) + (hat_one,) + tuple(mu_increasing))


def phi_embed(w: SignedPermutation) -> PermutationA:
    """The monomorphism W~_n -> S_{2n}."""
    n = w.n
    img = [0] * (2 * n)
    for i in range(1, n + 1):
        v = w.entries[n - i]
        img[i - 1] = n + 1 - v if v > 0 else n - v
    for i in range(1, n + 1):
        img[2 * n - i] = 2 * n + 1 - img[i - 1]
    return PermutationA(tuple(img))


def all_signed_permutations(n: int) -> Iterator[SignedPermutation]:
    """Every element of W~_n, ordered by length and then canonical word."""
    elems = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if signs.count(-1) % 2:
                continue
            elems.append(SignedPermutation(tuple(s * p for s, p in zip(signs, perm))))
    elems.sort(key=lambda w: (w.length(), canonical_reduced_word(w)))
    return iter(elems)


def all_permutations(n: int) -> list[PermutationA]:
    """S_n ordered by length, then by canonical reduced word."""
    perms = [PermutationA(p) for p in itertools.permutations(range(1, n + 1))]
    perms.sort(key=lambda p: (p.length(), p.reduced_word()))
    return perms


def random_signed_permutation(n: int, rng: random.Random) -> SignedPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    if signs.count(-1) % 2:
        signs[0] = -signs[0]
    return SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))


def lengths_batch(perms: Iterable[SignedPermutation]) -> np.ndarray:
    """Lengths of many elements through the integer kernel."""
    perms = list(perms)
    if not perms:
        return np.zeros(0, dtype=np.int64)
    mat = np.array([p.entries for p in perms], dtype=np.int64)
    return _kernels.signed_length_batch(mat)

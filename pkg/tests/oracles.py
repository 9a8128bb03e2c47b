"""Independent reference computations used by the tests.

Nothing here imports the package. Polynomials are plain dicts from exponent
tuples to Fractions.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from fractions import Fraction

# ---------------------------------------------------------------------------
# dict polynomials


def padd(a, b, s=1):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + s * c
        if out[e] == 0:
            del out[e]
    return out


def pmul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def pscale(a, c):
    return {e: c * v for e, v in a.items() if c * v}


def pvar(i, n):
    e = [0] * n
    e[i - 1] = 1
    return {tuple(e): Fraction(1)}


def elementary(k, n):
    out = {}
    for sub in itertools.combinations(range(n), k):
        e = [0] * n
        for i in sub:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return out


def elementary_sq(k, n):
    return {tuple(2 * a for a in e): c for e, c in elementary(k, n).items()}


def apply_perm(f, images):
    """Substitute x_i -> sign * x_j given images[i] = (j, sign), 0-based."""
    out = {}
    for e, c in f.items():
        new = [0] * len(e)
        sign = 1
        for i, k in enumerate(e):
            j, s = images[i]
            new[j] += k
            if s < 0 and k % 2:
                sign = -sign
        t = tuple(new)
        out[t] = out.get(t, 0) + sign * c
    return {e: c for e, c in out.items() if c}


def divide_linear(f, i, j, plus):
    """Exact division of f by x_i + x_j (plus) or x_i - x_j, by long division in x_i."""
    s = 1 if plus else -1
    q = {}
    rem = dict(f)
    while rem:
        e = max(rem, key=lambda t: (t[i], t))
        c = rem[e]
        if e[i] == 0:
            raise ArithmeticError("not divisible")
        qe = list(e)
        qe[i] -= 1
        qe = tuple(qe)
        q[qe] = q.get(qe, 0) + c
        shifted = list(qe)
        shifted[j] += 1
        rem = padd(rem, {e: c, tuple(shifted): s * c}, -1)
    return {e: c for e, c in q.items() if c}


def ddiff(f, a, n):
    """Divided difference with letter a (0 for the box) on n variables."""
    if a == 0:
        images = [(1, -1), (0, -1)] + [(k, 1) for k in range(2, n)]
        num = padd(f, apply_perm(f, images), -1)
        return divide_linear(num, 0, 1, plus=True) if num else {}
    images = [(k, 1) for k in range(n)]
    images[a - 1], images[a] = (a, 1), (a - 1, 1)
    num = padd(f, apply_perm(f, images), -1)
    return divide_linear(num, a - 1, a, plus=False) if num else {}


# ---------------------------------------------------------------------------
# signed permutations


def act(w, a):
    """w * s_a in one-line notation; a = 0 is the box generator."""
    w = list(w)
    if a == 0:
        w[0], w[1] = -w[1], -w[0]
    else:
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def bfs_lengths(n):
    """Word length of every element of W~_n by breadth-first search."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for a in range(n):
            v = act(w, a)
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def group_order(n):
    return math.factorial(n) * 2 ** (n - 1)


# ---------------------------------------------------------------------------
# type A Schubert polynomials by the transition-free definition


def schubert_by_definition(perm):
    """S_w = d_{a_1} ... d_{a_l}(x^delta) for a reduced word a of w^-1 w0."""
    n = len(perm)
    inv = [0] * n
    for i, v in enumerate(perm):
        inv[v - 1] = i + 1
    v = tuple(inv[n - 1 - i] for i in range(n))   # w^-1 w0 in one-line form
    word = []
    while _inv(v):
        a = next(k for k in range(1, n) if v[k - 1] > v[k])
        word.append(a)
        v = act(v, a)
    word.reverse()
    f = {tuple(range(n - 1, -1, -1)): Fraction(1)}
    for a in reversed(word):
        f = ddiff(f, a, n)
    return f


def _inv(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


# ---------------------------------------------------------------------------
# Pfaffian and determinant for integer matrices


def det(m):
    m = [[Fraction(x) for x in row] for row in m]
    size = len(m)
    out = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            for k in range(c, size):
                m[r][k] -= f * m[c][k]
    return out


# ---------------------------------------------------------------------------
# arithmetic degrees on OG for n = 2 from the explicit relations
#
# Generators w, wb (lower pair) and u, ub (upper pair). Omega_12 = w^wb,
# Omega^12 = u^ub and Omega = Omega_12 ^ Omega^12, whose integral is 1.


class Ext:
    """Exterior algebra on four generators, terms keyed by sorted index tuples."""

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @staticmethod
    def gen(i):
        return Ext({(i,): Fraction(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Ext(out)

    def __neg__(self):
        return Ext({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Ext({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                if set(k1) & set(k2):
                    continue
                seq = list(k1 + k2)
                sign = 1
                for i in range(len(seq)):
                    for j in range(len(seq) - 1 - i):
                        if seq[j] > seq[j + 1]:
                            seq[j], seq[j + 1] = seq[j + 1], seq[j]
                            sign = -sign
                key = tuple(seq)
                out[key] = out.get(key, 0) + sign * v1 * v2
        return Ext(out)

    def top(self):
        return self.terms.get((0, 1, 2, 3), Fraction(0))


def og2_arith_degrees():
    W, WB, U, UB = (Ext.gen(i) for i in range(4))
    A = W * WB   # Omega_12
    B = U * UB   # Omega^12
    x1 = -A + B
    x2 = A + B
    pair = (A + B).scale(-2)          # c~_2(E, E*)
    c1_dual = B.scale(2)              # c_1(E_2^*) = x_1 + x_2
    ct2_dual = -A                     # c~_2(E^*) = c~_2(E) = -Omega_12
    top = c1_dual.scale(Fraction(1, 2)) + ct2_dual   # H_1 = 1
    # x1^a x2^b = e1(x^2) f1 + x1 x2 g, decompositions by hand
    cases = {
        (3, 0): (x1, -x2),
        (2, 1): (None, x1),
        (1, 2): (None, x2),
        (0, 3): (x2, -x1),
    }
    out = {}
    for mono, (f1, g) in cases.items():
        form = top * g
        if f1 is not None:
            form = form - pair * f1
        out[mono] = form.top() / 2
    return out

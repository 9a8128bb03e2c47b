"""Compare the numba kernels with the pure-Python fallback.

Only the integer combinatorial kernels (tableau shapes, m-statistic, signed
lengths) have compiled versions; the exact rational algebra always runs in
Python. Usage:

    python benchmarks/bench_kernels.py [--n 5] [--repeat 3]
"""
import argparse
import time

import numpy as np

from orthoschubert import _kernels
from orthoschubert.stanley import flattened_words
from orthoschubert.weyl import all_signed_permutations, longest_element


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    words = flattened_words(longest_element(args.n - 1).embed(args.n), bound=40)
    mat, lengths = _kernels.as_word_matrix(words)
    perms = np.array([w.entries for w in all_signed_permutations(args.n)], dtype=np.int64)
    print(f"numba active: {_kernels.using_numba()}")
    print(f"{len(words)} flattened words of length {int(lengths.max())}; {len(perms)} signed permutations")

    if _kernels.using_numba():
        _kernels.kl_batch(mat[:2], lengths[:2])
        _kernels.signed_length_batch(perms[:2])

    rows = [
        ("kl_batch", lambda: _kernels.kl_batch_py(mat, lengths), lambda: _kernels.kl_batch(mat, lengths)),
        ("signed_length_batch", lambda: _kernels.signed_length_batch_py(perms),
         lambda: _kernels.signed_length_batch(perms)),
    ]
    for name, pure, fast in rows:
        tp, rp = best_of(pure, args.repeat)
        tf, rf = best_of(fast, args.repeat)
        rp, rf = (rp if isinstance(rp, tuple) else (rp,)), (rf if isinstance(rf, tuple) else (rf,))
        same = all(np.array_equal(a, b) for a, b in zip(rp, rf))
        print(f"{name:22s} pure {tp * 1e3:9.2f} ms   numba {tf * 1e3:9.2f} ms   x{tp / tf:6.1f}   agree={same}")


if __name__ == "__main__":
    main()

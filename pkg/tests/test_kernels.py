import os
import subprocess
import sys

import numpy as np

from orthoschubert import _kernels
from orthoschubert.weyl import all_signed_permutations, signed_length


def test_signed_length_batch():
    perms = np.array([w.entries for w in all_signed_permutations(4)], dtype=np.int64)
    want = [signed_length(p) for p in perms.tolist()]
    assert list(_kernels.signed_length_batch(perms)) == want
    assert list(_kernels.signed_length_batch_py(perms)) == want


def test_max_unimodal_simple():
    a = np.array([3, 1, 2, 1, 2], dtype=np.int64)
    assert _kernels.max_unimodal_py(a, 0, 5) == _kernels.max_unimodal(a, 0, 5)


def test_env_flag_disables_numba():
    code = "from orthoschubert import _kernels; print(_kernels.using_numba())"
    env = dict(os.environ, ORTHOSCHUBERT_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


def test_word_matrix_padding():
    mat, lengths = _kernels.as_word_matrix([(1, 2), (3,), ()])
    assert mat.shape == (3, 2)
    assert list(lengths) == [2, 1, 0]

"""The compiled kernels and their numpy fallbacks must agree bit for bit."""

import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

from youngflip import _kernels as K

rng = np.random.default_rng(11)


def random_exchange(m, n):
    b = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            if i >= n and j >= n:
                continue
            b[i, j] = rng.integers(-3, 4)
            b[j, i] = -b[i, j]
    return b


@pytest.mark.parametrize("trial", range(40))
def test_mutation_variants_agree(trial):
    m = int(rng.integers(1, 9))
    n = int(rng.integers(1, m + 1))
    b = random_exchange(m, n)
    k = int(rng.integers(0, n))
    ref = K.mutate_matrix_loop(b, k, n)
    assert np.array_equal(K.mutate_matrix_numpy(b, k, n), ref)
    assert np.array_equal(K.mutate_matrix_jit(b, k, n), ref)
    assert np.array_equal(K.mutate_matrix(ref, k, n), b)


def brute_independent(cross, max_size):
    d = len(cross)
    counts = [0] * (max_size + 1)
    for size in range(max_size + 1):
        for sub in itertools.combinations(range(d), size):
            if all(not (int(cross[i]) >> j) & 1 for i, j in itertools.combinations(sub, 2)):
                counts[size] += 1
    return counts


@pytest.mark.parametrize("trial", range(15))
def test_independent_counts_agree(trial):
    d = int(rng.integers(0, 11))
    cross = np.zeros(d, dtype=np.int64)
    for i in range(d):
        for j in range(i + 1, d):
            if rng.random() < 0.35:
                cross[i] |= 1 << j
                cross[j] |= 1 << i
    size = int(rng.integers(0, 5))
    want = brute_independent(cross, size)
    assert K.count_independent_loop(cross, size).tolist() == want
    assert K.count_independent_jit(cross, size).tolist() == want
    assert K.count_independent_numpy(cross, size).tolist() == want


def test_independent_rejects_wide_masks():
    with pytest.raises(ValueError):
        K.count_independent(np.zeros(63, dtype=np.int64), 2)


@pytest.mark.parametrize("trial", range(25))
def test_isomorphism_variants_agree(trial):
    m = int(rng.integers(1, 7))
    n = int(rng.integers(1, m + 1))
    b = random_exchange(m, n)
    perm = np.concatenate([rng.permutation(n), n + rng.permutation(m - n)])
    # b2[perm[i], perm[j]] = b[i, j]
    b2 = np.zeros_like(b)
    b2[np.ix_(perm, perm)] = b
    for fn in (K.find_isomorphism_loop, K.find_isomorphism_jit):
        p = fn(b, b2, n)
        assert p[0] >= 0 if m else True
        assert np.array_equal(b2[np.ix_(p, p)], b)
        assert set(p[:n].tolist()) == set(range(n))


def test_isomorphism_absent():
    path = np.array([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    star = np.array([[0, 1, 1], [-1, 0, 0], [-1, 0, 0]])
    assert K.find_isomorphism(path, star, 3) is None
    assert K.find_isomorphism(path, path[:2, :2], 2) is None


def test_env_flag_selects_numpy_path():
    env = dict(os.environ, YOUNGFLIP_NO_NUMBA="1")
    code = "from youngflip import _kernels as K; print(K.USE_NUMBA)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert out.strip() == "False"

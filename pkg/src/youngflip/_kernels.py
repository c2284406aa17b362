"""Hot integer kernels with a numba path and a pure-numpy fallback.

Three loops dominate the numeric side of the package:

* exchange-matrix mutation (called once per edge of every exchange graph),
* counting non-crossing diagonal subsets by size (face numbers of As^n),
* backtracking search for a quiver isomorphism.

Each kernel is written once as plain Python over numpy arrays.  When numba
is importable and ``YOUNGFLIP_NO_NUMBA`` is unset (or ``0``), the loop
versions are compiled with ``@njit``; otherwise the numpy versions run.
Both variants stay importable so ``benchmarks/bench_kernels.py`` can time
them side by side.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and os.environ.get("YOUNGFLIP_NO_NUMBA", "") in ("", "0")


def _njit(fn):
    if not _HAVE_NUMBA:
        return fn
    return numba.njit(cache=True)(fn)


# ---------------------------------------------------------------------------
# matrix mutation


def _mutate_matrix_loop(b, k, n_mutable):
    m = b.shape[0]
    out = b.copy()
    for i in range(m):
        bik = b[i, k]
        for j in range(m):
            if i == k or j == k:
                out[i, j] = -b[i, j]
            elif i >= n_mutable and j >= n_mutable:
                out[i, j] = 0
            else:
                bkj = b[k, j]
                out[i, j] = b[i, j] + (abs(bik) * bkj + bik * abs(bkj)) // 2
    return out


def mutate_matrix_numpy(b: np.ndarray, k: int, n_mutable: int) -> np.ndarray:
    col = b[:, k]
    row = b[k, :]
    out = b + (np.outer(np.abs(col), row) + np.outer(col, np.abs(row))) // 2
    out[k, :] = -b[k, :]
    out[:, k] = -b[:, k]
    out[n_mutable:, n_mutable:] = 0
    return out


mutate_matrix_loop = _mutate_matrix_loop
mutate_matrix_jit = _njit(_mutate_matrix_loop)


def mutate_matrix(b: np.ndarray, k: int, n_mutable: int) -> np.ndarray:
    """Mutate the skew-symmetric matrix ``b`` at 0-based vertex ``k``.

    Entries between two frozen vertices (index >= ``n_mutable``) are zeroed.
    """
    b = np.ascontiguousarray(b, dtype=np.int64)
    if USE_NUMBA:
        return mutate_matrix_jit(b, k, n_mutable)
    return mutate_matrix_numpy(b, k, n_mutable)


# ---------------------------------------------------------------------------
# non-crossing subsets


def _count_independent_loop(cross, max_size):
    # cross[i]: bitmask of items that conflict with item i; items < 63
    d = cross.shape[0]
    counts = np.zeros(max_size + 1, dtype=np.int64)
    counts[0] = 1
    if max_size == 0 or d == 0:
        return counts
    stack_next = np.zeros(max_size + 1, dtype=np.int64)
    stack_banned = np.zeros(max_size + 1, dtype=np.int64)
    depth = 0
    stack_next[0] = 0
    stack_banned[0] = 0
    while depth >= 0:
        j = stack_next[depth]
        banned = stack_banned[depth]
        while j < d and (banned >> j) & 1:
            j += 1
        if j >= d:
            depth -= 1
            continue
        stack_next[depth] = j + 1
        counts[depth + 1] += 1
        if depth + 1 < max_size:
            depth += 1
            stack_next[depth] = j + 1
            stack_banned[depth] = banned | cross[j]
    return counts


def count_independent_numpy(cross: np.ndarray, max_size: int) -> np.ndarray:
    d = cross.shape[0]
    counts = np.zeros(max_size + 1, dtype=np.int64)
    counts[0] = 1
    last = np.array([-1], dtype=np.int64)
    banned = np.array([0], dtype=np.int64)
    for size in range(1, max_size + 1):
        new_last = []
        new_banned = []
        for j in range(d):
            ok = (last < j) & (((banned >> j) & 1) == 0)
            if ok.any():
                new_last.append(np.full(int(ok.sum()), j, dtype=np.int64))
                new_banned.append(banned[ok] | cross[j])
        if not new_last:
            break
        last = np.concatenate(new_last)
        banned = np.concatenate(new_banned)
        counts[size] = last.size
    return counts


count_independent_loop = _count_independent_loop
count_independent_jit = _njit(_count_independent_loop)


def count_independent(cross: np.ndarray, max_size: int) -> np.ndarray:
    """Count conflict-free subsets of each size ``0..max_size``.

    ``cross[i]`` is the bitmask of items conflicting with item ``i``; at most
    62 items are supported.
    """
    cross = np.ascontiguousarray(cross, dtype=np.int64)
    if cross.shape[0] > 62:
        raise ValueError("at most 62 items fit in a bitmask")
    if USE_NUMBA:
        return count_independent_jit(cross, max_size)
    return count_independent_numpy(cross, max_size)


# ---------------------------------------------------------------------------
# quiver isomorphism


def _find_isomorphism_loop(b1, b2, n_mutable):
    # returns perm with b1[i, j] == b2[perm[i], perm[j]], or perm[0] == -1
    m = b1.shape[0]
    perm = np.full(m, -1, dtype=np.int64)
    used = np.zeros(m, dtype=np.bool_)
    cand = np.zeros(m, dtype=np.int64)
    if m == 0:
        return perm
    i = 0
    cand[0] = 0
    while True:
        if i == m:
            return perm
        if i < 0:
            perm[0] = -1
            return perm
        placed = False
        c = cand[i]
        lo = 0
        hi = m
        if i < n_mutable:
            hi = n_mutable
        else:
            lo = n_mutable
        if c < lo:
            c = lo
        while c < hi:
            if not used[c] and b1[i, i] == b2[c, c]:
                ok = True
                for j in range(i):
                    pj = perm[j]
                    if b1[i, j] != b2[c, pj] or b1[j, i] != b2[pj, c]:
                        ok = False
                        break
                if ok:
                    perm[i] = c
                    used[c] = True
                    cand[i] = c + 1
                    placed = True
                    break
            c += 1
        if placed:
            i += 1
            if i < m:
                cand[i] = 0
        else:
            cand[i] = 0
            i -= 1
            if i >= 0:
                used[perm[i]] = False
                perm[i] = -1


find_isomorphism_loop = _find_isomorphism_loop
find_isomorphism_jit = _njit(_find_isomorphism_loop)


def find_isomorphism(b1: np.ndarray, b2: np.ndarray, n_mutable: int) -> np.ndarray | None:
    """Backtracking search for a vertex bijection carrying ``b1`` onto ``b2``.

    Mutable vertices map to mutable ones, frozen to frozen.
    """
    b1 = np.ascontiguousarray(b1, dtype=np.int64)
    b2 = np.ascontiguousarray(b2, dtype=np.int64)
    if b1.shape != b2.shape:
        return None
    if b1.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    fn = find_isomorphism_jit if USE_NUMBA else find_isomorphism_loop
    perm = fn(b1, b2, n_mutable)
    if perm[0] < 0:
        return None
    return perm

"""Time the compiled kernels against the numpy and pure-loop versions.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The first jit call is excluded (compilation); every variant is checked to
return the same answer before it is timed.
"""

import argparse
import timeit

import numpy as np

from youngflip import _kernels as K
from youngflip.cluster import a_infinity_quiver
from youngflip.flipgraph import diagonals_of
from youngflip.triangulation import crosses


def mutation_case(size=60, steps=200, seed=0):
    rng = np.random.default_rng(seed)
    b = a_infinity_quiver(size, with_coefficients=False).b.copy()
    return b, rng.integers(0, size, steps)


def run_mutations(fn, b, ks, n):
    for k in ks:
        b = fn(b, int(k), n)
    return b


def crossing_masks(ngon):
    diags = diagonals_of(ngon)
    cross = np.zeros(len(diags), dtype=np.int64)
    for i, a in enumerate(diags):
        for j, d in enumerate(diags):
            if crosses(a, d):
                cross[i] |= 1 << j
    return cross


def isomorphism_case(size=9, seed=1):
    rng = np.random.default_rng(seed)
    b = a_infinity_quiver(size, with_coefficients=False).b.copy()
    for k in rng.integers(0, size, 30):
        b = K.mutate_matrix_numpy(b, int(k), size)
    perm = rng.permutation(size)
    b2 = np.zeros_like(b)
    b2[np.ix_(perm, perm)] = b
    return b, b2


def bench(label, variants, args, repeat):
    results = [fn(*args) for fn in variants.values()]  # warm-up, compiles the jit variant
    first = results[0]
    for r in results[1:]:
        if first is None or r is None:
            assert first is r is None
        elif label != "isomorphism":
            assert np.array_equal(r, first), label
    print(f"{label}")
    base = None
    for name, fn in variants.items():
        t = min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))
        base = base or t
        print(f"  {name:<6} {t * 1e3:9.2f} ms   x{base / t:6.1f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"numba active by default: {K.USE_NUMBA}")

    b, ks = mutation_case()
    n = b.shape[0]
    bench(
        "matrix mutation (60 vertices, 200 steps)",
        {
            "loop": lambda b, ks: run_mutations(K.mutate_matrix_loop, b, ks, n),
            "numpy": lambda b, ks: run_mutations(K.mutate_matrix_numpy, b, ks, n),
            "jit": lambda b, ks: run_mutations(K.mutate_matrix_jit, b, ks, n),
        },
        (b, ks),
        args.repeat,
    )

    cross = crossing_masks(9)
    bench(
        "non-crossing subsets (9-gon, up to 6 diagonals)",
        {"loop": K.count_independent_loop, "numpy": K.count_independent_numpy, "jit": K.count_independent_jit},
        (cross, 6),
        args.repeat,
    )

    b1, b2 = isomorphism_case()
    bench(
        "isomorphism",
        {
            "loop": lambda: K.find_isomorphism_loop(b1, b2, b1.shape[0]),
            "jit": lambda: K.find_isomorphism_jit(b1, b2, b1.shape[0]),
        },
        (),
        args.repeat,
    )


if __name__ == "__main__":
    main()

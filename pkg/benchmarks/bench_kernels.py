"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--rows 20000] [--vocab 50000] [--repeat 5]

Inputs mimic augmented tweets: ~30 n-grams per row over a large vocabulary.
The first numba call (compilation) is excluded from the timings.
"""
import argparse
import time

import numpy as np

from cmsenti import _kernels


def make_batch(rows, vocab, nnz_per_row, seed=0):
    rng = np.random.default_rng(seed)
    lengths = rng.poisson(nnz_per_row, size=rows)
    indptr = np.concatenate([[0], np.cumsum(lengths)]).astype(np.int64)
    indices = np.concatenate([np.sort(rng.choice(vocab, size=n, replace=False)) for n in lengths]).astype(np.int64)
    counts = rng.integers(1, 4, size=len(indices)).astype(np.int64)
    labels = rng.integers(0, 3, size=rows).astype(np.int64)
    return indptr, indices, counts, labels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=20000)
    ap.add_argument("--vocab", type=int, default=50000)
    ap.add_argument("--nnz", type=int, default=30)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    indptr, indices, counts, labels = make_batch(args.rows, args.vocab, args.nnz)
    rng = np.random.default_rng(1)
    lwp = np.log(rng.random((3, args.vocab)))
    prior = np.log(np.array([0.4, 0.4, 0.2]))
    print(f"rows={args.rows} vocab={args.vocab} nnz={len(indices)} numba_available={_kernels.HAVE_NUMBA}")

    cases = [
        ("class_term_counts", lambda f: f(indptr, indices, counts, labels, 3, args.vocab),
         _kernels.class_term_counts_numpy, _kernels.class_term_counts_numba),
        ("score_rows", lambda f: f(indptr, indices, counts, lwp, prior),
         _kernels.score_rows_numpy, _kernels.score_rows_numba),
    ]
    for name, call, numpy_fn, numba_fn in cases:
        call(numba_fn)  # compile
        t_np, r_np = best_of(lambda: call(numpy_fn), args.repeat)
        t_nb, r_nb = best_of(lambda: call(numba_fn), args.repeat)
        same = np.array_equal(r_np, r_nb)
        print(f"{name:<18} numpy {t_np * 1e3:8.2f} ms   numba {t_nb * 1e3:8.2f} ms   "
              f"speedup {t_np / t_nb:5.1f}x   identical={same}")


if __name__ == "__main__":
    main()

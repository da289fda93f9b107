"""Hot loops for training and scoring, over compressed-row sparse batches.

Each kernel exists twice: a numba ``@njit`` loop and a pure-numpy version.
Both accumulate in the same order, so results are bit-identical.  The numba
path is used when numba imports and ``CMSENTI_DISABLE_NUMBA`` is unset (or
``0``); set it to ``1`` to force numpy.
"""
import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("CMSENTI_DISABLE_NUMBA", "").strip().lower() in ("", "0", "false", "no")


def class_term_counts_numpy(indptr, indices, counts, labels, n_classes, m):
    """Sum term counts per class: out[c, j] = sum of counts of term j in rows labeled c."""
    out = np.zeros((n_classes, m), dtype=np.int64)
    row_labels = np.repeat(labels, np.diff(indptr))
    np.add.at(out, (row_labels, indices), counts)
    return out


def score_rows_numpy(indptr, indices, counts, log_word_prob, log_prior):
    """Row scores: log_prior[c] + sum over (j, f) in row of f * log_word_prob[c, j]."""
    n = len(indptr) - 1
    scores = np.zeros((n, log_word_prob.shape[0]), dtype=np.float64)
    if len(indices):
        contrib = counts[:, None].astype(np.float64) * log_word_prob[:, indices].T
        row_ids = np.repeat(np.arange(n), np.diff(indptr))
        np.add.at(scores, row_ids, contrib)
    return scores + log_prior


if HAVE_NUMBA:
    @njit(cache=True)
    def class_term_counts_numba(indptr, indices, counts, labels, n_classes, m):
        out = np.zeros((n_classes, m), dtype=np.int64)
        for r in range(len(indptr) - 1):
            c = labels[r]
            for k in range(indptr[r], indptr[r + 1]):
                out[c, indices[k]] += counts[k]
        return out

    @njit(cache=True)
    def score_rows_numba(indptr, indices, counts, log_word_prob, log_prior):
        n = len(indptr) - 1
        n_classes = log_word_prob.shape[0]
        scores = np.empty((n, n_classes), dtype=np.float64)
        for r in range(n):
            for c in range(n_classes):
                acc = 0.0
                for k in range(indptr[r], indptr[r + 1]):
                    acc += float(counts[k]) * log_word_prob[c, indices[k]]
                scores[r, c] = acc + log_prior[c]
        return scores
else:  # pragma: no cover
    class_term_counts_numba = class_term_counts_numpy
    score_rows_numba = score_rows_numpy


def class_term_counts(indptr, indices, counts, labels, n_classes, m):
    fn = class_term_counts_numba if USE_NUMBA else class_term_counts_numpy
    return fn(indptr, indices, counts, np.asarray(labels, dtype=np.int64), n_classes, m)


def score_rows(indptr, indices, counts, log_word_prob, log_prior):
    fn = score_rows_numba if USE_NUMBA else score_rows_numpy
    return fn(indptr, indices, counts, log_word_prob, log_prior)

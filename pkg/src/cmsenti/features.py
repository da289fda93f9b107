"""N-gram vocabulary and term-frequency vectors.

N-grams are contiguous runs of 1..ngram_max token texts joined by a single
space, computed per tweet.  Polarity tag tokens count as ordinary tokens.
The vocabulary keeps n-grams whose total occurrence count over the training
streams reaches ``min_count``.
"""
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import TrainingError


def _texts(tokens):
    return [getattr(t, "text", t) for t in tokens]


def extract_ngrams(tokens, ngram_max: int) -> list:
    """All n-grams for n = 1..ngram_max, grouped by order, in stream order."""
    if ngram_max < 1:
        raise ValueError("ngram_max must be >= 1")
    texts = _texts(tokens)
    grams = list(texts)
    for n in range(2, ngram_max + 1):
        grams.extend(" ".join(texts[i:i + n]) for i in range(len(texts) - n + 1))
    return grams


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple
    ngram_max: int
    min_count: int
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {t: i for i, t in enumerate(self.terms)}
        if len(index) != len(self.terms):
            raise ValueError("duplicate vocabulary terms")
        object.__setattr__(self, "index", index)

    def __len__(self):
        return len(self.terms)

    def __contains__(self, term):
        return term in self.index


@dataclass(frozen=True)
class SparseVector:
    """Sorted (index, count) pairs; absent indices have count 0."""
    indices: np.ndarray
    counts: np.ndarray

    @classmethod
    def from_dict(cls, counts: dict):
        idx = np.array(sorted(counts), dtype=np.int64)
        return cls(idx, np.array([counts[i] for i in idx], dtype=np.int64))

    def __len__(self):
        return len(self.indices)

    def items(self):
        return list(zip(self.indices.tolist(), self.counts.tolist()))

    def total(self) -> int:
        return int(self.counts.sum())

    def to_dense(self, m: int) -> np.ndarray:
        out = np.zeros(m, dtype=np.int64)
        out[self.indices] = self.counts
        return out


@dataclass(frozen=True)
class CsrBatch:
    """Row-stacked sparse vectors in compressed-row form, the kernels' input."""
    indptr: np.ndarray
    indices: np.ndarray
    counts: np.ndarray

    @classmethod
    def stack(cls, vectors):
        vectors = list(vectors)
        indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(v) for v in vectors])
        if vectors:
            indices = np.concatenate([v.indices for v in vectors]).astype(np.int64)
            counts = np.concatenate([v.counts for v in vectors]).astype(np.int64)
        else:
            indices = np.zeros(0, dtype=np.int64)
            counts = np.zeros(0, dtype=np.int64)
        return cls(indptr, indices, counts)

    def __len__(self):
        return len(self.indptr) - 1

    def row(self, i) -> SparseVector:
        lo, hi = self.indptr[i], self.indptr[i + 1]
        return SparseVector(self.indices[lo:hi], self.counts[lo:hi])


def count_ngrams(streams, ngram_max: int) -> Counter:
    totals = Counter()
    for stream in streams:
        totals.update(extract_ngrams(stream, ngram_max))
    return totals


def build_vocabulary(training, ngram_max: int, min_count: int, order: str = "lexicographic") -> Vocabulary:
    """Build a vocabulary from augmented training streams.

    `order` fixes index assignment: ``"lexicographic"`` (default) or
    ``"first_seen"`` (order of first occurrence).
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    training = list(training)
    if not training:
        raise TrainingError("cannot build a vocabulary from an empty training set")
    totals = count_ngrams(training, ngram_max)
    kept = [t for t, c in totals.items() if c >= min_count]
    if order == "lexicographic":
        kept.sort()
    elif order != "first_seen":
        raise ValueError(f"unknown vocabulary order {order!r}")
    return Vocabulary(tuple(kept), ngram_max, min_count)


def vectorize(tokens, vocab: Vocabulary) -> SparseVector:
    counts = Counter()
    index = vocab.index
    for gram in extract_ngrams(tokens, vocab.ngram_max):
        i = index.get(gram)
        if i is not None:
            counts[i] += 1
    return SparseVector.from_dict(counts)


def vectorize_batch(streams, vocab: Vocabulary) -> CsrBatch:
    return CsrBatch.stack(vectorize(s, vocab) for s in streams)

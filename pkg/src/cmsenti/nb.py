"""Multinomial Naive Bayes with add-one smoothing, computed in log space.

For class c and vocabulary size N the word probability is

    P(w_n | c) = (1 + Fr_nc) / (N + sum_x Fr_xc)

where Fr_xc is the total count of term x over the class-c training vectors.
A tweet with term counts f_n scores

    score(c) = log P(c) + sum_n f_n * log P(w_n | c)

and is assigned the highest-scoring class.  The multinomial constant is
shared by all classes and never computed.  Scores that agree to within a
relative 1e-9 count as tied; ties go to the earliest class in
``model.classes``.
"""
import hashlib
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .corpus import LABELS
from .errors import ModelFormatError, TrainingError
from .features import CsrBatch, SparseVector, Vocabulary

TIE_TOLERANCE = 1e-9

MAGIC = "CMSENTI-NB"
FORMAT_VERSION = 1


@dataclass(frozen=True, eq=False)
class NBModel:
    classes: tuple
    log_prior: np.ndarray          # (C,)
    log_word_prob: np.ndarray      # (C, m)
    class_total_count: np.ndarray  # (C,) sum_x Fr_xc
    class_doc_count: np.ndarray    # (C,) training tweets per class
    vocab: Vocabulary
    use_priors: bool = True
    metadata: tuple = ()           # extra (key, value) header pairs, e.g. lexicon fingerprints

    @property
    def m(self):
        return len(self.vocab)

    def word_prob(self, label, term):
        return float(np.exp(self.log_word_prob[self.classes.index(label), self.vocab.index[term]]))

    def meta(self, key, default=None):
        return dict(self.metadata).get(key, default)


class ClassScores(NamedTuple):
    scores: dict
    label: str


def train(vectors, labels, vocab: Vocabulary, *, classes=LABELS, use_priors=True, metadata=()) -> NBModel:
    """Fit the model from sparse training vectors and their labels.

    `vectors` is a CsrBatch or a sequence of SparseVector.  Every class in
    `classes` needs at least one training tweet.
    """
    batch = vectors if isinstance(vectors, CsrBatch) else CsrBatch.stack(vectors)
    labels = list(labels)
    classes = tuple(classes)
    m = len(vocab)
    if m == 0:
        raise TrainingError("empty vocabulary")
    if len(labels) != len(batch):
        raise ValueError(f"{len(batch)} vectors but {len(labels)} labels")
    pos = {c: i for i, c in enumerate(classes)}
    try:
        y = np.array([pos[lab] for lab in labels], dtype=np.int64)
    except KeyError as exc:
        raise TrainingError(f"label {exc.args[0]!r} is not one of {classes}") from None
    doc_count = np.bincount(y, minlength=len(classes)).astype(np.int64)
    missing = [c for c, n in zip(classes, doc_count) if n == 0]
    if missing:
        raise TrainingError(f"no training tweets for class(es): {', '.join(missing)}")
    if len(batch.indices) and batch.indices.max() >= m:
        raise ValueError("vector index out of vocabulary range")

    term_counts = _kernels.class_term_counts(batch.indptr, batch.indices, batch.counts, y, len(classes), m)
    totals = term_counts.sum(axis=1)
    log_word_prob = np.log1p(term_counts.astype(np.float64)) - np.log(float(m) + totals.astype(np.float64))[:, None]
    log_prior = np.log(doc_count / doc_count.sum())
    return NBModel(classes, log_prior, log_word_prob, totals, doc_count, vocab, bool(use_priors), tuple(metadata))


def _effective_prior(model):
    if model.use_priors:
        return model.log_prior
    return np.zeros_like(model.log_prior)


def score_batch(model: NBModel, batch: CsrBatch) -> np.ndarray:
    if len(batch.indices) and (batch.indices.max() >= model.m or batch.indices.min() < 0):
        raise IndexError(f"vector index out of range for vocabulary of size {model.m}")
    return _kernels.score_rows(batch.indptr, batch.indices, batch.counts,
                               model.log_word_prob, _effective_prior(model))


def argmax_first(scores: np.ndarray) -> np.ndarray:
    """Row-wise argmax; near-ties (relative TIE_TOLERANCE) resolve to the lowest column."""
    scores = np.atleast_2d(scores)
    top = scores.max(axis=1, keepdims=True)
    tol = TIE_TOLERANCE * np.maximum(1.0, np.abs(top))
    return np.argmax(scores >= top - tol, axis=1)


def score(model: NBModel, vector: SparseVector) -> ClassScores:
    row = score_batch(model, CsrBatch.stack([vector]))[0]
    best = int(argmax_first(row)[0])
    return ClassScores(dict(zip(model.classes, row.tolist())), model.classes[best])


def predict(model: NBModel, vector: SparseVector) -> str:
    return score(model, vector).label


def predict_batch(model: NBModel, batch) -> list:
    if not isinstance(batch, CsrBatch):
        batch = CsrBatch.stack(batch)
    if len(batch) == 0:
        return []
    best = argmax_first(score_batch(model, batch))
    return [model.classes[i] for i in best]


# -- persistence -----------------------------------------------------------
#
# Text format, UTF-8, LF line endings:
#
#   CMSENTI-NB 1
#   ngram_max <int>
#   min_count <int>
#   use_priors <0|1>
#   classes <label> ...
#   meta <key> <value>                 (zero or more)
#   vocab <m>
#   <term>                             (m lines, index order)
#   doc_count <int> ...                (per class)
#   total_count <int> ...              (per class)
#   log_prior <hexfloat> ...           (per class)
#   log_word_prob <label>              (per class, followed by m hexfloat lines)
#   <hexfloat>
#   sha256 <hex digest of every preceding byte>
#
# Floats are written with float.hex so a load reproduces them bit for bit.

def dumps_model(model: NBModel) -> str:
    lines = [
        f"{MAGIC} {FORMAT_VERSION}",
        f"ngram_max {model.vocab.ngram_max}",
        f"min_count {model.vocab.min_count}",
        f"use_priors {int(model.use_priors)}",
        "classes " + " ".join(model.classes),
    ]
    for key, value in model.metadata:
        lines.append(f"meta {key} {value}")
    lines.append(f"vocab {model.m}")
    for term in model.vocab.terms:
        if "\n" in term or "\r" in term:
            raise ModelFormatError(f"vocabulary term {term!r} contains a line break")
        lines.append(term)
    lines.append("doc_count " + " ".join(str(int(x)) for x in model.class_doc_count))
    lines.append("total_count " + " ".join(str(int(x)) for x in model.class_total_count))
    lines.append("log_prior " + " ".join(float(x).hex() for x in model.log_prior))
    for c, label in enumerate(model.classes):
        lines.append(f"log_word_prob {label}")
        lines.extend(float(x).hex() for x in model.log_word_prob[c])
    body = "\n".join(lines) + "\n"
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    return body + f"sha256 {digest}\n"


def save_model(model: NBModel, sink):
    """Write `model` to a path or a text stream."""
    text = dumps_model(model)
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        with open(sink, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


class _Reader:
    def __init__(self, lines):
        self.lines = lines
        self.pos = 0

    def next(self, what):
        if self.pos >= len(self.lines):
            raise ModelFormatError(f"truncated model file: expected {what}")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def field(self, key):
        line = self.next(key)
        name, _, rest = line.partition(" ")
        if name != key:
            raise ModelFormatError(f"line {self.pos}: expected {key!r}, found {line[:40]!r}")
        return rest


def loads_model(text: str) -> NBModel:
    if not text.startswith(MAGIC + " "):
        raise ModelFormatError("not a model file (bad magic header)")
    first = text.split("\n", 1)[0]
    version = first[len(MAGIC) + 1:].strip()
    if version != str(FORMAT_VERSION):
        raise ModelFormatError(f"unsupported model format version {version!r} (expected {FORMAT_VERSION})")
    body, sep, trailer = text.rstrip("\n").rpartition("\n")
    if not sep or not trailer.startswith("sha256 "):
        raise ModelFormatError("truncated model file: missing checksum trailer")
    body += "\n"
    if hashlib.sha256(body.encode("utf-8")).hexdigest() != trailer[7:].strip():
        raise ModelFormatError("checksum mismatch: model file is corrupted")

    r = _Reader(body[:-1].split("\n"))
    r.next("header")
    try:
        ngram_max = int(r.field("ngram_max"))
        min_count = int(r.field("min_count"))
        use_priors = bool(int(r.field("use_priors")))
        classes = tuple(r.field("classes").split())
        metadata = []
        while r.pos < len(r.lines) and r.lines[r.pos].startswith("meta "):
            key, _, value = r.next("meta")[5:].partition(" ")
            metadata.append((key, value))
        m = int(r.field("vocab"))
        terms = tuple(r.next("vocabulary term") for _ in range(m))
        doc_count = np.array([int(x) for x in r.field("doc_count").split()], dtype=np.int64)
        totals = np.array([int(x) for x in r.field("total_count").split()], dtype=np.int64)
        log_prior = np.array([float.fromhex(x) for x in r.field("log_prior").split()])
        log_word_prob = np.empty((len(classes), m))
        for c, label in enumerate(classes):
            if r.field("log_word_prob") != label:
                raise ModelFormatError(f"class table out of order at {label!r}")
            for j in range(m):
                log_word_prob[c, j] = float.fromhex(r.next("log probability"))
    except ValueError as exc:
        if isinstance(exc, ModelFormatError):
            raise
        raise ModelFormatError(f"malformed model file near line {r.pos}: {exc}") from exc
    if r.pos != len(r.lines):
        raise ModelFormatError(f"unexpected content at line {r.pos + 1}")
    if not (len(doc_count) == len(totals) == len(log_prior) == len(classes)):
        raise ModelFormatError("per-class arrays disagree with class list")
    vocab = Vocabulary(terms, ngram_max, min_count)
    return NBModel(classes, log_prior, log_word_prob, totals, doc_count, vocab, use_priors, tuple(metadata))


def load_model(source) -> NBModel:
    """Read a model from a path or a text stream."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "rb") as fh:
            raw = fh.read()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ModelFormatError(f"model file is not valid UTF-8: {exc}") from exc
    return loads_model(text)

from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cmsenti import nb
from cmsenti.errors import TrainingError
from cmsenti.features import (CsrBatch, SparseVector, Vocabulary, build_vocabulary, extract_ngrams,
                              vectorize, vectorize_batch)

from _fixtures import WORKED_STREAM


def test_two_token_stream():
    assert extract_ngrams(["darun_BN", "<Positive>"], 2) == ["darun_BN", "<Positive>", "darun_BN <Positive>"]


def test_single_token_has_no_bigrams():
    assert extract_ngrams(["ok_EN"], 2) == ["ok_EN"]
    assert extract_ngrams([], 3) == []


def test_worked_example_count():
    grams = extract_ngrams(WORKED_STREAM, 2)
    assert len(grams) == 15
    assert "darun_BN <Positive>" in grams


def test_bad_ngram_max():
    with pytest.raises(ValueError):
        extract_ngrams(["a"], 0)


def test_cutoff():
    streams = [["good_EN", "<UNK>"], ["good_EN", "<UNK>", "good_EN", "<UNK>"], ["meh_EN", "<UNK>"]]
    v2 = build_vocabulary(streams, 1, 2)
    assert "good_EN" in v2 and "meh_EN" not in v2
    v1 = build_vocabulary(streams, 1, 1)
    assert set(v1.terms) == {"good_EN", "meh_EN", "<UNK>"}


def test_tiny_vocab_and_lexicographic_indices():
    v = build_vocabulary([["a_EN", "<UNK>"]], 1, 1)
    assert len(v) == 2
    assert v.terms == ("<UNK>", "a_EN")
    assert [v.index[t] for t in v.terms] == [0, 1]


def test_empty_training_rejected():
    with pytest.raises(TrainingError):
        build_vocabulary([], 2, 1)


def test_vectorize_counts():
    terms = ("a", "b", "c", "d", "e", "good_EN")
    vocab = Vocabulary(terms, 1, 1)
    vec = vectorize(["good_EN", "x", "good_EN"], vocab)
    assert vec.items() == [(5, 2)]


def test_vectorize_oov_is_empty():
    vocab = Vocabulary(("a",), 2, 1)
    vec = vectorize(["zz", "yy"], vocab)
    assert len(vec) == 0 and vec.total() == 0


def test_worked_example_self_vector():
    vocab = build_vocabulary([WORKED_STREAM], 2, 1)
    vec = vectorize(WORKED_STREAM, vocab)
    assert vec.total() == 15
    assert np.all(vec.counts >= 1)
    # <UNK> occurs three times in the stream
    assert vec.to_dense(len(vocab))[vocab.index["<UNK>"]] == 3


def test_csr_stack_roundtrip():
    vecs = [SparseVector.from_dict({0: 1, 3: 2}), SparseVector.from_dict({}), SparseVector.from_dict({1: 4})]
    batch = CsrBatch.stack(vecs)
    assert len(batch) == 3
    assert batch.indptr.tolist() == [0, 2, 2, 3]
    assert batch.row(0).items() == [(0, 1), (3, 2)]
    assert batch.row(1).items() == []


streams = st.lists(st.lists(st.sampled_from(["a", "b", "c", "<UNK>", "<Positive>"]), min_size=1, max_size=8),
                   min_size=1, max_size=8)


@given(streams, st.integers(1, 3), st.integers(1, 4))
def test_vocabulary_properties(ss, n, k):
    vocab = build_vocabulary(ss, n, k)
    assert sorted(vocab.index.values()) == list(range(len(vocab)))
    recount = Counter(g for s in ss for g in extract_ngrams(s, n))
    assert all(recount[t] >= k for t in vocab.terms)
    assert {t for t, c in recount.items() if c >= k} == set(vocab.terms)
    for s in ss:
        vec = vectorize(s, vocab)
        assert np.all(np.diff(vec.indices) > 0)
        assert np.all(vec.indices < len(vocab)) and np.all(vec.counts >= 1)
        if k == 1:
            assert vec.total() == len(extract_ngrams(s, n))


@given(streams, st.lists(st.sampled_from(["a", "b", "c", "<UNK>", "q"]), min_size=1, max_size=8))
def test_index_order_does_not_change_predictions(ss, probe):
    labels = ["positive" if i % 2 == 0 else "negative" for i in range(len(ss))]
    if len(set(labels)) < 2:
        ss, labels = ss + ss, labels + ["negative"] * len(ss)
    preds = []
    for order in ("lexicographic", "first_seen"):
        vocab = build_vocabulary(ss, 2, 1, order=order)
        model = nb.train(vectorize_batch(ss, vocab), labels, vocab, classes=("positive", "negative"))
        s = nb.score(model, vectorize(probe, vocab))
        preds.append((s.label, sorted(s.scores.items())))
    assert preds[0][0] == preds[1][0]
    for (c0, s0), (c1, s1) in zip(preds[0][1], preds[1][1]):
        assert c0 == c1 and s0 == pytest.approx(s1, abs=1e-12)

"""Contest metrics, stratified k-fold cross-validation and grid tuning.

The overall score is the macro-F, the unweighted mean of the per-class F
scores.  Overall precision and recall are likewise macro-averaged.  Note that
the macro-F is generally *not* 2PR/(P+R) of the overall P and R.
"""
import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from .corpus import LABELS
from .errors import EvaluationError, TrainingError
from .pipeline import Params, Pipeline

log = logging.getLogger(__name__)

_POS = {c: i for i, c in enumerate(LABELS)}


def confusion(gold, predicted) -> np.ndarray:
    """3x3 counts, rows gold, columns predicted, in LABELS order."""
    gold, predicted = list(gold), list(predicted)
    if len(gold) != len(predicted):
        raise EvaluationError(f"{len(gold)} gold labels but {len(predicted)} predictions")
    if not gold:
        raise EvaluationError("nothing to evaluate")
    cm = np.zeros((3, 3), dtype=np.int64)
    try:
        g = [_POS[x] for x in gold]
        p = [_POS[x] for x in predicted]
    except KeyError as exc:
        raise EvaluationError(f"unknown label {exc.args[0]!r}") from None
    np.add.at(cm, (g, p), 1)
    return cm


def _ratio(num, den):
    return num / den if den else 0.0


def per_class_prf(cm) -> list:
    """(precision, recall, F) per class; any 0/0 is taken as 0."""
    cm = np.asarray(cm)
    out = []
    for c in range(cm.shape[0]):
        tp = float(cm[c, c])
        p = _ratio(tp, float(cm[:, c].sum()))
        r = _ratio(tp, float(cm[c, :].sum()))
        f = _ratio(2 * p * r, p + r)
        out.append((p, r, f))
    return out


def macro_f(f_values) -> float:
    f_pos, f_neg, f_neu = f_values
    return (f_pos + f_neg + f_neu) / 3


@dataclass
class EvalReport:
    precision: tuple
    recall: tuple
    f: tuple
    confusion: np.ndarray
    total: int

    @classmethod
    def from_confusion(cls, cm):
        cm = np.asarray(cm, dtype=np.int64)
        prf = per_class_prf(cm)
        return cls(tuple(x[0] for x in prf), tuple(x[1] for x in prf), tuple(x[2] for x in prf),
                   cm, int(cm.sum()))

    @classmethod
    def from_labels(cls, gold, predicted):
        return cls.from_confusion(confusion(gold, predicted))

    @property
    def overall_precision(self):
        return sum(self.precision) / 3

    @property
    def overall_recall(self):
        return sum(self.recall) / 3

    @property
    def macro_f(self):
        return macro_f(self.f)

    def to_kv(self) -> str:
        """Machine-readable ``key=value`` lines; floats use repr so output is exact."""
        lines = [f"total={self.total}",
                 f"precision={self.overall_precision!r}",
                 f"recall={self.overall_recall!r}",
                 f"macro_f={self.macro_f!r}"]
        for i, label in enumerate(LABELS):
            lines += [f"{label}.precision={self.precision[i]!r}",
                      f"{label}.recall={self.recall[i]!r}",
                      f"{label}.f={self.f[i]!r}"]
        for i, g in enumerate(LABELS):
            for j, p in enumerate(LABELS):
                lines.append(f"confusion.{g}.{p}={int(self.confusion[i, j])}")
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        rows = [f"{'class':<10} {'P':>7} {'R':>7} {'F':>7}"]
        for i, label in enumerate(LABELS):
            rows.append(f"{label:<10} {self.precision[i]:7.4f} {self.recall[i]:7.4f} {self.f[i]:7.4f}")
        rows.append(f"{'overall':<10} {self.overall_precision:7.4f} {self.overall_recall:7.4f} {self.macro_f:7.4f}")
        rows.append("")
        rows.append("gold \\ pred " + " ".join(f"{p:>9}" for p in LABELS))
        for i, g in enumerate(LABELS):
            rows.append(f"{g:<11} " + " ".join(f"{int(v):>9}" for v in self.confusion[i]))
        rows.append(f"n = {self.total}")
        return "\n".join(rows) + "\n"


def mean_report(reports) -> EvalReport:
    """Average per-class P/R/F over reports; the confusion matrix is summed."""
    reports = list(reports)
    if not reports:
        raise EvaluationError("no reports to average")
    n = len(reports)
    return EvalReport(
        tuple(sum(r.precision[i] for r in reports) / n for i in range(3)),
        tuple(sum(r.recall[i] for r in reports) / n for i in range(3)),
        tuple(sum(r.f[i] for r in reports) / n for i in range(3)),
        sum(r.confusion for r in reports),
        sum(r.total for r in reports),
    )


def stratified_folds(labels, k, seed) -> np.ndarray:
    """Fold id per item.

    Items of each class are shuffled and dealt round-robin over the folds; the
    dealing position carries over between classes, so fold sizes differ by at
    most one and every fold is non-empty when k <= len(labels).
    """
    labels = list(labels)
    if k < 2:
        raise EvaluationError("k must be >= 2")
    if k > len(labels):
        raise EvaluationError(f"cannot split {len(labels)} tweets into {k} folds")
    rng = np.random.default_rng(seed)
    folds = np.empty(len(labels), dtype=np.int64)
    offset = 0
    for label in LABELS:
        members = np.array([i for i, lab in enumerate(labels) if lab == label], dtype=np.int64)
        if 0 < len(members) < k:
            log.warning("class %s has %d tweets, fewer than %d folds", label, len(members), k)
        members = rng.permutation(members)
        folds[members] = (offset + np.arange(len(members))) % k
        offset += len(members)
    return folds


@dataclass
class FoldResult:
    report: EvalReport
    train_idx: np.ndarray
    test_idx: np.ndarray
    vocab: object = field(repr=False)


@dataclass
class CVResult:
    mean: EvalReport
    folds: list
    params: Params

    def format(self) -> str:
        lines = [f"ngram_max={self.params.ngram_max} min_count={self.params.min_count} "
                 f"use_priors={int(self.params.use_priors)} folds={len(self.folds)}"]
        for i, fold in enumerate(self.folds):
            r = fold.report
            lines.append(f"fold {i}: n={r.total} P={r.overall_precision!r} R={r.overall_recall!r} "
                         f"F={r.macro_f!r} m={len(fold.vocab)}")
        lines.append("mean:")
        lines.append(self.mean.to_kv().rstrip("\n"))
        return "\n".join(lines) + "\n"


def kfold_cv(corpus, k=10, seed=0, params=Params(), *, en_lexicon=None, bn_lexicon=None, folds=None) -> CVResult:
    """Stratified k-fold CV.  Vocabulary and model come from the training folds only."""
    corpus = list(corpus)
    labels = [t.label for t in corpus]
    if any(lab is None for lab in labels):
        raise EvaluationError("cross-validation needs a labeled corpus")
    if folds is None:
        folds = stratified_folds(labels, k, seed)
    pipe = Pipeline(params, en_lexicon, bn_lexicon)
    results = []
    for f in range(k):
        test_idx = np.flatnonzero(folds == f)
        train_idx = np.flatnonzero(folds != f)
        model = pipe.fit([corpus[i] for i in train_idx])
        test = [corpus[i] for i in test_idx]
        pred = pipe.predict(model, test)
        report = EvalReport.from_labels([t.label for t in test], pred)
        results.append(FoldResult(report, train_idx, test_idx, model.vocab))
    return CVResult(mean_report(r.report for r in results), results, params)


@dataclass
class TuneResult:
    best: Params
    best_macro_f: float
    cells: list  # (Params, mean macro-F or None when the cell could not be trained)

    def format(self) -> str:
        lines = []
        for params, score in self.cells:
            shown = "failed" if score is None else repr(score)
            lines.append(f"ngram_max={params.ngram_max} min_count={params.min_count} macro_f={shown}")
        lines.append(f"best: ngram_max={self.best.ngram_max} min_count={self.best.min_count} "
                     f"macro_f={self.best_macro_f!r}")
        return "\n".join(lines) + "\n"


def grid_tune(corpus, ngram_grid=(1, 2), min_count_grid=(1, 2, 3), k=10, seed=0, *,
              use_priors=True, en_lexicon=None, bn_lexicon=None) -> TuneResult:
    """Pick (ngram_max, min_count) by mean CV macro-F over shared folds.

    Ties go to the smaller ngram_max, then the smaller min_count.  A cell
    whose folds cannot be trained (e.g. empty vocabulary) is skipped.
    """
    corpus = list(corpus)
    folds = stratified_folds([t.label for t in corpus], k, seed)
    cells = []
    best = None
    for n, mc in itertools.product(sorted(ngram_grid), sorted(min_count_grid)):
        params = Params(n, mc, use_priors)
        try:
            score = kfold_cv(corpus, k, seed, params, en_lexicon=en_lexicon,
                             bn_lexicon=bn_lexicon, folds=folds).mean.macro_f
        except TrainingError as exc:
            log.warning("grid cell ngram_max=%d min_count=%d skipped: %s", n, mc, exc)
            cells.append((params, None))
            continue
        cells.append((params, score))
        if best is None or score > best[1]:
            best = (params, score)
    if best is None:
        raise TrainingError("no grid cell could be trained")
    return TuneResult(best[0], best[1], cells)

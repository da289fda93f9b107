"""End-to-end wiring: tagged tweets -> augmented streams -> vectors -> model."""
from dataclasses import dataclass
from typing import Optional

from . import nb
from .augment import augment_tweet
from .corpus import LABELS
from .errors import DataError, TrainingError
from .features import build_vocabulary, vectorize_batch
from .lexicon import SentimentLexicon

PAIR_PRESETS = {
    "BN-EN": {"ngram_max": 2, "min_count": 2},
    "HI-EN": {"ngram_max": 2, "min_count": 1},
}


@dataclass(frozen=True)
class Params:
    ngram_max: int = 2
    min_count: int = 2
    use_priors: bool = True

    def __post_init__(self):
        if self.ngram_max < 1:
            raise ValueError("ngram_max must be >= 1")
        if self.min_count < 1:
            raise ValueError("min_count must be >= 1")


@dataclass(frozen=True)
class Pipeline:
    params: Params = Params()
    en_lexicon: Optional[SentimentLexicon] = None
    bn_lexicon: Optional[SentimentLexicon] = None

    def augment(self, tweets):
        return [augment_tweet(t, self.en_lexicon, self.bn_lexicon) for t in tweets]

    def _metadata(self):
        return (
            ("lexicon_en", self.en_lexicon.fingerprint() if self.en_lexicon else "none"),
            ("lexicon_bn", self.bn_lexicon.fingerprint() if self.bn_lexicon else "none"),
        )

    def fit(self, tweets, *, classes=None, vocab_order="lexicographic") -> nb.NBModel:
        """Build vocabulary and model from labeled tweets.

        `classes` defaults to the labels present in `tweets`, in canonical order.
        """
        tweets = list(tweets)
        if not tweets:
            raise TrainingError("training corpus is empty")
        if any(t.label is None for t in tweets):
            raise TrainingError("training tweets must all be labeled")
        if classes is None:
            present = {t.label for t in tweets}
            classes = tuple(c for c in LABELS if c in present)
        streams = self.augment(tweets)
        vocab = build_vocabulary(streams, self.params.ngram_max, self.params.min_count, order=vocab_order)
        batch = vectorize_batch(streams, vocab)
        return nb.train(batch, [t.label for t in tweets], vocab, classes=classes,
                        use_priors=self.params.use_priors, metadata=self._metadata())

    def check_model(self, model: nb.NBModel):
        """Raise DataError if `model` was trained with different lexicons."""
        for key, value in self._metadata():
            stored = model.meta(key)
            if stored is not None and stored != value:
                raise DataError(f"{key} differs from the one the model was trained with")

    def predict(self, model: nb.NBModel, tweets) -> list:
        vocab = model.vocab
        return nb.predict_batch(model, vectorize_batch(self.augment(tweets), vocab))

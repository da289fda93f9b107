"""Sentiment polarity classification for language-tagged code-mixed tweets."""
from .augment import AugmentedToken, TokenKind, attach_language_tag, augment_tweet, sentiment_tag_for
from .corpus import LABELS, LabeledTweet, TaggedToken, corpus_stats, load_corpus, parse_tagged_line
from .errors import (CmSentiError, CorpusError, DataError, EvaluationError, LexiconError,
                     ModelFormatError, TrainingError)
from .evaluate import EvalReport, confusion, grid_tune, kfold_cv, macro_f, per_class_prf
from .features import SparseVector, Vocabulary, build_vocabulary, extract_ngrams, vectorize
from .lexicon import Lang, SentimentLexicon, SentimentTag, load_lexicon, lookup
from .nb import NBModel, load_model, predict, save_model, score, train
from .pipeline import Params, Pipeline

__version__ = "0.1.0"

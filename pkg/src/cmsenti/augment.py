"""Turn tagged tweets into the token stream the featurizer sees.

Each word ``surface/LANG`` becomes two tokens: ``surface_LANG`` and its
polarity tag (``<Positive>``, ``<Negative>`` or ``<UNK>``)::

    It's/EN a/EN darun/BN movie/EN
    -> It's_EN <UNK> a_EN <UNK> darun_BN <Positive> movie_EN <UNK>

Lookup uses the bare surface.  HI words are always ``<UNK>``.
"""
import enum
from typing import NamedTuple, Optional

from .corpus import TaggedToken
from .lexicon import Lang, SentimentLexicon, SentimentTag


class TokenKind(enum.Enum):
    WORD = "Word"
    SENTI_TAG = "SentiTag"


class AugmentedToken(NamedTuple):
    text: str
    kind: TokenKind


def attach_language_tag(token: TaggedToken) -> AugmentedToken:
    return AugmentedToken(f"{token.surface}_{token.lang.value}", TokenKind.WORD)


def _check(lexicon, lang):
    if lexicon is not None and lexicon.language is not lang:
        raise ValueError(f"expected a {lang.value} lexicon, got {lexicon.language.value}")


def sentiment_tag_for(token: TaggedToken,
                      en_lexicon: Optional[SentimentLexicon],
                      bn_lexicon: Optional[SentimentLexicon]) -> SentimentTag:
    if token.lang is Lang.EN:
        lexicon = en_lexicon
    elif token.lang is Lang.BN:
        lexicon = bn_lexicon
    else:
        return SentimentTag.UNK
    if lexicon is None:
        return SentimentTag.UNK
    return lexicon.lookup(token.surface)


def augment_tweet(tweet, en_lexicon=None, bn_lexicon=None) -> list:
    """Augment a LabeledTweet (or a plain sequence of TaggedToken)."""
    _check(en_lexicon, Lang.EN)
    _check(bn_lexicon, Lang.BN)
    tokens = getattr(tweet, "tokens", tweet)
    out = []
    for tok in tokens:
        out.append(attach_language_tag(tok))
        tag = sentiment_tag_for(tok, en_lexicon, bn_lexicon)
        out.append(AugmentedToken(tag.token, TokenKind.SENTI_TAG))
    return out

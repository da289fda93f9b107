"""Language-tagged tweet files.

One tweet per line, tab separated::

    id<TAB>label<TAB>tagged tokens      (labeled)
    id<TAB>tagged tokens                (unlabeled)

Tagged tokens are whitespace separated ``surface/TAG`` items with TAG one of
EN, BN, HI.  The tag is whatever follows the last ``/``, so surfaces may
themselves contain slashes (URLs).  Blank lines are skipped.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from ._io import iter_lines
from .errors import CorpusError
from .lexicon import Lang

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"
LABELS = (POSITIVE, NEGATIVE, NEUTRAL)

_TAGS = {lang.value: lang for lang in Lang}


class TaggedToken(NamedTuple):
    surface: str
    lang: Lang

    def __str__(self):
        return f"{self.surface}/{self.lang.value}"


@dataclass(frozen=True)
class LabeledTweet:
    id: str
    tokens: tuple
    label: Optional[str] = None

    def __post_init__(self):
        if not self.tokens:
            raise CorpusError(f"tweet {self.id!r} has no tokens")
        if self.label is not None and self.label not in LABELS:
            raise CorpusError(f"tweet {self.id!r}: unknown label {self.label!r}")


@dataclass
class CorpusStats:
    class_counts: dict = field(default_factory=lambda: dict.fromkeys(LABELS, 0))
    total: int = 0
    labeled: int = 0
    tokens: int = 0
    lang_counts: dict = field(default_factory=lambda: {lang.value: 0 for lang in Lang})

    def format(self):
        lines = [f"tweets: {self.total} ({self.labeled} labeled)"]
        lines += [f"  {label}: {self.class_counts[label]}" for label in LABELS]
        lines.append(f"tokens: {self.tokens}")
        lines += [f"  {lang}: {n}" for lang, n in self.lang_counts.items()]
        return "\n".join(lines)


def parse_tagged_line(line: str) -> list:
    items = line.split()
    if not items:
        raise CorpusError("empty tweet")
    tokens = []
    for i, item in enumerate(items):
        surface, sep, tag = item.rpartition("/")
        if not sep:
            raise CorpusError(f"item {i} ({item!r}): missing language tag")
        if tag not in _TAGS:
            raise CorpusError(f"item {i} ({item!r}): unknown language tag {tag!r}")
        if not surface:
            raise CorpusError(f"item {i} ({item!r}): empty surface")
        tokens.append(TaggedToken(surface, _TAGS[tag]))
    return tokens


def format_tagged_line(tokens) -> str:
    return " ".join(str(t) for t in tokens)


def format_record(tweet: LabeledTweet) -> str:
    if tweet.label is None:
        return f"{tweet.id}\t{format_tagged_line(tweet.tokens)}"
    return f"{tweet.id}\t{tweet.label}\t{format_tagged_line(tweet.tokens)}"


def load_corpus(source, labeled: Optional[bool] = True) -> list:
    """Parse a corpus file into a list of LabeledTweet.

    With ``labeled=None`` each line is classified by its field count (3 for
    labeled, 2 for unlabeled).  Every malformed line is collected before a
    single CorpusError is raised.
    """
    tweets = []
    problems = []
    seen = {}
    for lineno, line in iter_lines(source, CorpusError):
        if not line.strip():
            continue
        fields = line.split("\t")
        want = {True: 3, False: 2, None: len(fields)}[labeled]
        if len(fields) != want or want not in (2, 3):
            problems.append((lineno, f"expected {want if want in (2, 3) else '2 or 3'} tab-separated fields, got {len(fields)}"))
            continue
        tweet_id = fields[0].strip()
        label = fields[1].strip() if want == 3 else None
        if not tweet_id:
            problems.append((lineno, "empty id"))
            continue
        if label is not None and label not in LABELS:
            problems.append((lineno, f"unknown label {label!r}"))
            continue
        try:
            tokens = parse_tagged_line(fields[-1])
        except CorpusError as exc:
            problems.append((lineno, str(exc)))
            continue
        if tweet_id in seen:
            problems.append((lineno, f"duplicate id {tweet_id!r} (first on line {seen[tweet_id]})"))
            continue
        seen[tweet_id] = lineno
        tweets.append(LabeledTweet(tweet_id, tuple(tokens), label))
    if problems:
        detail = "; ".join(f"line {n}: {msg}" for n, msg in problems[:20])
        more = f" (+{len(problems) - 20} more)" if len(problems) > 20 else ""
        raise CorpusError(f"{len(problems)} bad line(s): {detail}{more}", problems)
    return tweets


def write_corpus(tweets, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for tweet in tweets:
            fh.write(format_record(tweet) + "\n")


def corpus_stats(corpus) -> CorpusStats:
    stats = CorpusStats()
    langs = Counter()
    for tweet in corpus:
        stats.total += 1
        stats.tokens += len(tweet.tokens)
        langs.update(tok.lang.value for tok in tweet.tokens)
        if tweet.label is not None:
            stats.labeled += 1
            stats.class_counts[tweet.label] += 1
    stats.lang_counts.update(langs)
    return stats

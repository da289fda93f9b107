"""Per-language polarity word lists and lookup.

A lexicon file is UTF-8 text with one romanized word per line.  Blank lines
and lines starting with ``#`` are ignored.  Words are trimmed and, unless
``case_fold=False``, lowercased.  Matching is exact after folding: spelling
variants (e.g. ``A`` vs ``aa`` transliterations) are not reconciled.
"""
import enum
import hashlib
from dataclasses import dataclass
from pathlib import Path

from ._io import iter_lines
from .errors import LexiconError


class Lang(str, enum.Enum):
    EN = "EN"
    BN = "BN"
    HI = "HI"

    def __str__(self):
        return self.value


class SentimentTag(str, enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    UNK = "UNK"

    @property
    def token(self):
        """The literal token inserted into the augmented stream, e.g. ``<Positive>``."""
        return f"<{self.value}>"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SentimentLexicon:
    language: Lang
    positive_words: frozenset
    negative_words: frozenset
    case_fold: bool = True

    def __post_init__(self):
        overlap = self.positive_words & self.negative_words
        if overlap:
            raise LexiconError(f"word(s) in both polarity lists: {', '.join(sorted(overlap))}")
        for word in self.positive_words | self.negative_words:
            if not word or any(ch.isspace() for ch in word):
                raise LexiconError(f"invalid lexicon entry {word!r}")

    def __len__(self):
        return len(self.positive_words) + len(self.negative_words)

    def lookup(self, word: str) -> SentimentTag:
        key = word.lower() if self.case_fold else word
        if key in self.positive_words:
            return SentimentTag.POSITIVE
        if key in self.negative_words:
            return SentimentTag.NEGATIVE
        return SentimentTag.UNK

    def fingerprint(self) -> str:
        """Content hash, stored in model files to catch lexicon mismatches at predict time."""
        h = hashlib.sha256()
        h.update(f"{self.language.value}|{int(self.case_fold)}\n".encode())
        for prefix, words in (("+", self.positive_words), ("-", self.negative_words)):
            for w in sorted(words):
                h.update(f"{prefix}{w}\n".encode("utf-8"))
        return h.hexdigest()


def empty_lexicon(language) -> SentimentLexicon:
    return SentimentLexicon(Lang(language), frozenset(), frozenset())


def _read_words(source, case_fold, label):
    words = set()
    try:
        for lineno, line in iter_lines(source, LexiconError):
            word = line.strip()
            if not word or word.startswith("#"):
                continue
            if any(ch.isspace() for ch in word):
                raise LexiconError(f"line {lineno}: entry {word!r} contains whitespace")
            words.add(word.lower() if case_fold else word)
    except LexiconError as exc:
        raise LexiconError(f"{label} list: {exc}") from exc
    return words


def load_lexicon(positive_source, negative_source, language, *, case_fold=True) -> SentimentLexicon:
    """Load a lexicon from a positive and a negative word list.

    Raises LexiconError if a word appears in both lists (after folding) or a
    line is not valid UTF-8.
    """
    language = Lang(language)
    if language is Lang.HI:
        raise LexiconError("no sentiment lexicon is used for HI")
    pos = _read_words(positive_source, case_fold, "positive")
    neg = _read_words(negative_source, case_fold, "negative")
    both = sorted(pos & neg)
    if both:
        raise LexiconError(f"{language.value} lexicon: word {both[0]!r} is in both polarity lists"
                           + (f" (and {len(both) - 1} more)" if len(both) > 1 else ""))
    return SentimentLexicon(language, frozenset(pos), frozenset(neg), case_fold)


def lookup(lexicon: SentimentLexicon, word: str) -> SentimentTag:
    return lexicon.lookup(word)


def load_lexicon_path(path, language, *, case_fold=True) -> SentimentLexicon:
    """Load the lexicon behind a CLI ``--lexicon-*`` argument.

    A directory must hold ``positive.txt`` and ``negative.txt``.  A regular
    file is read as one ``word<TAB>polarity`` pair per line, polarity being
    ``positive``/``negative`` (``pos``/``neg`` and ``+``/``-`` also accepted).
    """
    path = Path(path)
    if path.is_dir():
        return load_lexicon(path / "positive.txt", path / "negative.txt", language, case_fold=case_fold)
    pos, neg = [], []
    for lineno, line in iter_lines(path, LexiconError):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"{path}: line {lineno}: expected 'word<TAB>polarity'")
        word, polarity = parts[0].strip(), parts[1].strip().lower()
        if polarity in ("positive", "pos", "+"):
            pos.append(word)
        elif polarity in ("negative", "neg", "-"):
            neg.append(word)
        else:
            raise LexiconError(f"{path}: line {lineno}: unknown polarity {parts[1]!r}")
    try:
        return load_lexicon(pos, neg, language, case_fold=case_fold)
    except LexiconError as exc:
        raise LexiconError(f"{path}: {exc}") from exc

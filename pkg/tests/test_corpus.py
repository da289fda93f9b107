import pytest
from hypothesis import given, strategies as st

from cmsenti.corpus import (LABELS, LabeledTweet, TaggedToken, corpus_stats, format_record,
                            load_corpus, parse_tagged_line)
from cmsenti.errors import CorpusError
from cmsenti.lexicon import Lang

from _fixtures import WORKED_LINE


def test_parse_worked_example():
    assert parse_tagged_line(WORKED_LINE) == [
        ("It's", Lang.EN), ("a", Lang.EN), ("darun", Lang.BN), ("movie", Lang.EN)]


def test_parse_single_and_last_slash():
    assert parse_tagged_line("ok/EN") == [TaggedToken("ok", Lang.EN)]
    assert parse_tagged_line("http://x/EN") == [TaggedToken("http://x", Lang.EN)]


@pytest.mark.parametrize("line, where", [
    ("", "empty"),
    ("   ", "empty"),
    ("ok/EN plain", "item 1"),
    ("ok/EN x/FR", "item 1"),
    ("/EN", "item 0"),
    ("ok/en", "item 0"),
])
def test_parse_errors(line, where):
    with pytest.raises(CorpusError, match=where):
        parse_tagged_line(line)


def _labeled(counts):
    lines = []
    for label, n in counts.items():
        lines += [f"{label[:3]}{i}\t{label}\tok/EN darun/BN" for i in range(n)]
    return ("\n".join(lines) + "\n").encode()


def test_load_corpus_class_counts():
    corpus = load_corpus(_labeled({"positive": 1000, "negative": 1000, "neutral": 500}))
    assert len(corpus) == 2500
    stats = corpus_stats(corpus)
    assert stats.class_counts == {"positive": 1000, "negative": 1000, "neutral": 500}
    assert stats.tokens == 5000
    assert stats.lang_counts == {"EN": 2500, "BN": 2500, "HI": 0}


def test_hi_en_table_shape():
    stats = corpus_stats(load_corpus(_labeled({"positive": 4064, "negative": 2972, "neutral": 5900})))
    assert stats.class_counts == {"positive": 4064, "negative": 2972, "neutral": 5900}
    assert sum(stats.class_counts.values()) == stats.labeled == stats.total


def test_empty_corpus():
    assert load_corpus(b"") == []
    stats = corpus_stats([])
    assert stats.total == stats.tokens == stats.labeled == 0
    assert set(stats.class_counts.values()) == {0}


def test_unknown_label():
    with pytest.raises(CorpusError, match="unknown label 'happy'"):
        load_corpus(b"t1\thappy\tok/EN\n")


def test_aggregate_errors_and_duplicates():
    data = b"t1\tpositive\tok/EN\nt2\tpositive\tok\nt1\tnegative\tbad/EN\nt3\tmeh\tx/EN\n"
    with pytest.raises(CorpusError) as info:
        load_corpus(data)
    assert [n for n, _ in info.value.problems] == [2, 3, 4]
    assert "duplicate id 't1'" in str(info.value)


def test_unlabeled_and_autodetect():
    data = b"u1\tok/EN\r\nu2\tbad/EN\r\n"
    tweets = load_corpus(data, labeled=False)
    assert [t.label for t in tweets] == [None, None]
    mixed = load_corpus(b"a\tpositive\tok/EN\nb\tok/EN\n", labeled=None)
    assert [t.label for t in mixed] == ["positive", None]
    with pytest.raises(CorpusError):
        load_corpus(data, labeled=True)


def test_from_path(tmp_path):
    p = tmp_path / "c.tsv"
    p.write_bytes(b"t1\tneutral\tkuch/HI nahi/HI\n")
    (t,) = load_corpus(p)
    assert t.tokens == (TaggedToken("kuch", Lang.HI), TaggedToken("nahi", Lang.HI))


surface = st.text(alphabet=st.characters(blacklist_categories=("Cs", "Zs", "Zl", "Zp", "Cc")),
                  min_size=1, max_size=6).filter(lambda s: not s.endswith("/") and s.strip() == s
                                                 and not any(c.isspace() for c in s))
token = st.builds(TaggedToken, surface, st.sampled_from(list(Lang)))
tweet = st.builds(LabeledTweet,
                  st.from_regex(r"[a-z0-9]{1,6}", fullmatch=True),
                  st.lists(token, min_size=1, max_size=6).map(tuple),
                  st.sampled_from(list(LABELS) + [None]))


@given(tweet)
def test_round_trip(t):
    (back,) = load_corpus([format_record(t)], labeled=None)
    assert back == t

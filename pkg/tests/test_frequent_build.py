import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taletailor.corpus.frequent import build_frequent_words

WORD = st.text(alphabet="bcdfgklmnprst", min_size=2, max_size=7)


def test_hundred_word_vocabulary_gives_seven():
    corpus = [" ".join(f"word{i}" for i in range(100))]
    frequent = build_frequent_words(corpus, fraction=0.07)
    assert len(frequent) == 7


def test_most_frequent_content_word_included():
    corpus = ["dragon dragon dragon castle gate", "dragon flew high"]
    frequent = build_frequent_words(corpus, fraction=0.07)
    assert "dragon" in frequent


def test_fraction_one_keeps_whole_content_vocabulary():
    corpus = ["apple banana cherry", "banana cherry dates"]
    frequent = build_frequent_words(corpus, fraction=1.0)
    assert frequent.words == frozenset({"apple", "banana", "cherry", "dates"})


def test_stop_words_excluded_before_ranking():
    corpus = ["the the the the dragon"]
    frequent = build_frequent_words(corpus, fraction=1.0)
    assert "the" not in frequent.words
    assert "dragon" in frequent.words


def test_ties_break_alphabetically():
    corpus = ["zebra yak zebra yak apple"]
    frequent = build_frequent_words(corpus, fraction=0.4)  # ceil(0.4 * 3) = 2
    assert frequent.words == frozenset({"yak", "zebra"})


def test_empty_corpus_raises():
    with pytest.raises(ValueError):
        build_frequent_words([])
    with pytest.raises(ValueError):
        build_frequent_words(["the of and"])  # no content words


def test_bad_fraction_raises():
    with pytest.raises(ValueError):
        build_frequent_words(["word"], fraction=0.0)


@given(st.lists(st.lists(WORD, min_size=1, max_size=25), min_size=1, max_size=6))
def test_size_is_exact_ceiling(texts):
    corpus = [" ".join(ws) for ws in texts]
    vocabulary = {w for ws in texts for w in ws}
    frequent = build_frequent_words(corpus, fraction=0.07, stop_words=frozenset())
    assert len(frequent) == math.ceil(0.07 * len(vocabulary))

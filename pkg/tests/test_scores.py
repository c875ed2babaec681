import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taletailor.metrics.frequent import FrequentWordSet
from taletailor.metrics.lexicon import SentimentLexicon
from taletailor.metrics.scores import (
    EMPTY_PENALTY,
    diversity,
    positivity,
    readability,
    readability_breakdown,
    simplicity,
)
from taletailor.metrics.tokenizer import tokenize

WORD = st.text(alphabet="bcdfgklmnprstvz", min_size=2, max_size=8)


class TestReadability:
    def test_empty_text_hits_both_penalties(self):
        b = readability_breakdown(tokenize(""))
        assert b.word_chars == EMPTY_PENALTY
        assert b.sent_words == EMPTY_PENALTY
        assert readability(tokenize("")) == -15.0

    def test_three_word_sentence(self):
        assert readability(tokenize("The cat sat.")) == pytest.approx(4.5, abs=1e-9)

    def test_two_tiny_sentences(self):
        assert readability(tokenize("Go. Go.")) == pytest.approx(2.0, abs=1e-9)

    def test_punctuation_only_is_degenerate(self):
        assert readability(tokenize("... !!!")) == -15.0

    @given(st.lists(st.lists(WORD, min_size=1, max_size=6), min_size=2, max_size=6))
    def test_invariant_under_sentence_reordering(self, sentence_words):
        sentences = [" ".join(ws) + "." for ws in sentence_words]
        original = readability(tokenize(" ".join(sentences)))
        shuffled = sentences[:]
        random.Random(13).shuffle(shuffled)
        reordered = readability(tokenize(" ".join(shuffled)))
        assert math.isclose(original, reordered, abs_tol=1e-9)


class TestPositivity:
    def test_empty_text_is_neutral(self, lexicon):
        assert positivity(tokenize(""), lexicon) == 0.0

    def test_unknown_words_are_neutral(self, lexicon):
        assert positivity(tokenize("zzyq wqqz."), lexicon) == 0.0

    def test_two_word_mean(self, lexicon):
        # merry: (0.8, 0.0); strange: (0.1, 0.5) -> (0.8 + (0.1 - 0.5)) / 2
        assert positivity(tokenize("merry strange"), lexicon) == pytest.approx(0.2, abs=1e-9)

    def test_multi_sense_words_average(self, lexicon):
        # bright appears with (0.5, 0) and (0.25, 0.125)
        assert positivity(tokenize("bright"), lexicon) == pytest.approx(0.375 - 0.0625, abs=1e-9)

    def test_stop_words_do_not_dilute(self, lexicon):
        alone = positivity(tokenize("merry"), lexicon)
        padded = positivity(tokenize("the merry and the merry"), lexicon)
        assert padded == pytest.approx(alone, abs=1e-9)


class TestDiversity:
    def test_all_distinct_is_one(self):
        assert diversity(tokenize("dragon castle knight")) == 1.0

    def test_repeated_word(self):
        assert diversity(tokenize("cat cat cat")) == pytest.approx(1 / 3, abs=1e-9)

    def test_only_stop_words_is_zero(self):
        assert diversity(tokenize("the and of")) == 0.0

    @given(st.lists(WORD, min_size=0, max_size=30))
    def test_bounds_and_distinctness(self, words):
        t = tokenize(" ".join(words))
        d = diversity(t)
        assert 0.0 <= d <= 1.0
        if t.filtered_words:
            distinct = len(set(t.filtered_words)) == len(t.filtered_words)
            assert (d == 1.0) == distinct


class TestSimplicity:
    def test_single_overlap(self):
        freq = FrequentWordSet(frozenset({"old", "king", "little"}))
        assert simplicity(tokenize("king dragon"), freq) == 1.0

    def test_disjoint_sets(self):
        freq = FrequentWordSet(frozenset({"old", "king"}))
        assert simplicity(tokenize("dragon castle"), freq) == 0.0

    def test_subset_counts_whole_set(self):
        freq = FrequentWordSet(frozenset({"old", "king", "little", "dragon", "bird"}))
        assert simplicity(tokenize("old king little dragon"), freq) == 4.0

    def test_case_insensitive_membership(self):
        freq = FrequentWordSet(frozenset({"dragon"}))
        assert simplicity(tokenize("Dragon DRAGON"), freq) == 1.0
        assert "DRAGON" in freq

    @given(st.lists(WORD, min_size=0, max_size=20), st.sets(WORD, max_size=20))
    def test_bounded_by_both_sets(self, words, freq_words):
        t = tokenize(" ".join(words))
        freq = FrequentWordSet(frozenset(freq_words))
        s = simplicity(t, freq)
        assert s == int(s) >= 0
        assert s <= min(len(set(t.filtered_words)), len(freq.words))


def test_scores_in_lexicon_are_bounded(lexicon):
    assert isinstance(lexicon, SentimentLexicon)
    for pos, neg in lexicon.entries.values():
        assert 0.0 <= pos <= 1.0
        assert 0.0 <= neg <= 1.0

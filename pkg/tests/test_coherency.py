import pytest

from taletailor.metrics.coherency import coherency, lsa_embed
from taletailor.metrics.tokenizer import tokenize


def test_single_sentence_scores_zero():
    assert coherency(tokenize("The king smiled at last.")) == 0.0


def test_empty_text_scores_zero():
    assert coherency(tokenize("")) == 0.0


@pytest.mark.parametrize("k", range(2, 11))
def test_identical_sentences_score_k_minus_one(k):
    text = " ".join(["The little dragon slept in the tower."] * k)
    assert coherency(tokenize(text)) == pytest.approx(k - 1, abs=1e-6)


def test_disjoint_vocabulary_scores_zero():
    text = "Dragons breathe orange fire. Melody swam toward dawn."
    assert coherency(tokenize(text)) == pytest.approx(0.0, abs=1e-6)


def test_partial_overlap_lands_between_extremes():
    text = "The dragon guarded the castle. The dragon slept near the gate."
    score = coherency(tokenize(text))
    assert 0.0 < score < 1.0 + 1e-9


def test_related_middle_sentence_only_counts_against_first():
    # Sentences 2 and 3 share words with each other but not with sentence 1.
    text = "Rain fell upon oak leaves. Dragons guard gold. Dragons hoard gold."
    score = coherency(tokenize(text))
    assert score == pytest.approx(0.0, abs=1e-6)


def test_lsa_rank_capped_by_sentences_and_terms():
    emb = lsa_embed(["alpha beta", "beta gamma"])
    assert emb.shape[0] == 2
    assert emb.shape[1] <= 2


def test_case_folding_in_terms():
    text = "The Dragon flew. the dragon flew."
    assert coherency(tokenize(text)) == pytest.approx(1.0, abs=1e-6)

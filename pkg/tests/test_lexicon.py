import pytest

from taletailor.metrics.lexicon import SentimentLexicon


def test_load_ignores_comments(lexicon):
    assert len(lexicon) > 0


def test_single_sense_scores(lexicon):
    assert lexicon.scores("merry") == (0.8, 0.0)
    assert lexicon.scores("strange") == (0.1, 0.5)


def test_multi_sense_average(lexicon):
    pos, neg = lexicon.scores("bright")
    assert pos == pytest.approx((0.5 + 0.25) / 2)
    assert neg == pytest.approx((0.0 + 0.125) / 2)


def test_multi_term_synset_spreads_scores(lexicon):
    assert lexicon.scores("happy") == (0.75, 0.0)
    assert lexicon.scores("glad") == (0.75, 0.0)


def test_absent_word_is_neutral(lexicon):
    assert lexicon.scores("xylophone") == (0.0, 0.0)
    assert lexicon.polarity("xylophone") == 0.0


def test_pos_specific_lookup(lexicon):
    assert lexicon.scores("smile", "v") == (0.375, 0.0)
    assert lexicon.scores("smile", "n") == (0.0, 0.0)


def test_case_insensitive(lexicon):
    assert lexicon.scores("MERRY") == (0.8, 0.0)


def test_malformed_line_raises(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("a\t1\t0.5\n", "utf-8")
    with pytest.raises(ValueError):
        SentimentLexicon.load(bad)


def test_out_of_range_score_raises(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("a\t1\t1.5\t0\tword#1\tgloss\n", "utf-8")
    with pytest.raises(ValueError):
        SentimentLexicon.load(bad)


def test_empty_lexicon_is_neutral():
    lex = SentimentLexicon.empty()
    assert lex.scores("anything") == (0.0, 0.0)

import pytest

from taletailor.corpus.stats import corpus_stats, render_figures, write_frequencies_tsv, write_stats_tsv


def test_single_one_sentence_story():
    stats = corpus_stats(["The cat sat."])
    assert stats.histogram == {1: 1}
    assert stats.sentence_counts == [1]


def test_three_story_hand_counts():
    corpus = [
        "The cat sat. It ran!",  # 2 sentences, 5 words
        "Go.",  # 1 sentence, 1 word
        "One. Two. Three.",  # 3 sentences, 3 words
    ]
    stats = corpus_stats(corpus)
    assert stats.sentence_counts == [2, 1, 3]
    assert stats.histogram == {1: 1, 2: 1, 3: 1}
    assert stats.total_tokens == 9
    assert stats.frequencies["the"] == 1
    assert stats.frequencies["go"] == 1
    # every word occurs exactly once in this corpus
    assert stats.once_fraction == 1.0
    assert stats.vocabulary_size == 9


def test_frequencies_sum_to_total_tokens():
    corpus = ["a b a. c b a!", "b c. c c c."]
    stats = corpus_stats(corpus)
    assert sum(stats.frequencies.values()) == stats.total_tokens


def test_mean_from_histogram_matches_direct_mean():
    corpus = ["One. Two.", "Three. Four. Five.", "Six."]
    stats = corpus_stats(corpus)
    from_histogram = sum(count * n for count, n in stats.histogram.items()) / sum(stats.histogram.values())
    assert stats.mean_sentences == pytest.approx(from_histogram)


def test_empty_corpus_raises():
    with pytest.raises(ValueError):
        corpus_stats([])


def test_tsv_outputs(tmp_path):
    stats = corpus_stats(["The cat sat. It ran!", "Go."])
    stats_path = tmp_path / "stats.tsv"
    freq_path = tmp_path / "frequencies.tsv"
    write_stats_tsv(stats, stats_path)
    write_frequencies_tsv(stats, freq_path)
    stats_lines = stats_path.read_text("utf-8").splitlines()
    assert "stories\t2" in stats_lines
    assert "sentence_count\tstories" in stats_lines
    freq_lines = freq_path.read_text("utf-8").splitlines()
    assert freq_lines[0] == "word\tcount"
    assert len(freq_lines) == 1 + stats.vocabulary_size


def test_figures_rendered(tmp_path):
    stats = corpus_stats(["The cat sat. It ran!", "Go go go. Stop!", "One. Two. Three."])
    written = render_figures(stats, tmp_path)
    assert len(written) == 3
    for path in written:
        assert path.exists()
        assert path.suffix == ".png"
        assert path.stat().st_size > 500

import pytest

from taletailor.corpus.sentiment import LexiconSentimentScorer, filter_by_sentiment


def test_constant_high_scorer_keeps_all():
    stories = ["a", "b", "c"]
    assert filter_by_sentiment(stories, lambda _: 1.0) == stories


def test_constant_low_scorer_drops_all():
    assert filter_by_sentiment(["a", "b"], lambda _: 0.5) == []


def test_threshold_is_strict():
    scores = {"great": 0.95, "fine": 0.9, "grim": 0.2}
    stories = list(scores)
    kept = filter_by_sentiment(stories, lambda s: scores[s])
    assert kept == ["great"]


def test_order_preserved():
    scores = {"a": 0.99, "b": 0.1, "c": 0.95, "d": 0.92}
    kept = filter_by_sentiment(list(scores), lambda s: scores[s])
    assert kept == ["a", "c", "d"]


def test_scorer_failure_excludes_story(caplog):
    def flaky(text):
        if text == "boom":
            raise RuntimeError("model fell over")
        return 1.0

    with caplog.at_level("WARNING"):
        kept = filter_by_sentiment(["ok", "boom", "also ok"], flaky)
    assert kept == ["ok", "also ok"]
    assert any("excluded" in r.message for r in caplog.records)


def test_lexicon_scorer_maps_polarity_to_unit_interval(lexicon):
    scorer = LexiconSentimentScorer(lexicon)
    happy = scorer("merry merry merry")
    sad = scorer("dreadful gloomy")
    neutral = scorer("zzz qqq")
    assert happy == pytest.approx((1 + 0.8) / 2)
    assert sad < 0.5 < happy
    assert neutral == 0.5
    assert 0.0 <= sad <= 1.0


def test_custom_text_extractor():
    stories = [{"body": "x"}, {"body": "y"}]
    kept = filter_by_sentiment(stories, lambda t: 1.0 if t == "x" else 0.0, text_of=lambda s: s["body"])
    assert kept == [{"body": "x"}]

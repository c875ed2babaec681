import pytest

from taletailor.metrics.coherency import coherency
from taletailor.metrics.context import score_text
from taletailor.metrics.distributions import tale_like
from taletailor.metrics.scores import diversity, positivity, readability, simplicity


def test_empty_text_composes_the_empty_rules(scoring_ctx):
    v = score_text("", scoring_ctx)
    assert v.readability == -15.0
    assert v.positivity == 0.0
    assert v.diversity == 0.0
    assert v.simplicity == 0.0
    assert v.coherency == 0.0
    assert v.tale_like == 0.0


def test_scoring_is_pure(scoring_ctx):
    text = "The old king smiled. The king listened to the merry song."
    assert score_text(text, scoring_ctx) == score_text(text, scoring_ctx)


def test_vector_matches_individual_metrics(scoring_ctx):
    text = "The little dragon flew over the castle. The merry bird sang to the dragon."
    t = scoring_ctx.tokenize(text)
    v = score_text(t, scoring_ctx)
    assert v.readability == readability(t)
    assert v.positivity == positivity(t, scoring_ctx.lexicon)
    assert v.diversity == diversity(t)
    assert v.simplicity == simplicity(t, scoring_ctx.frequent_words)
    assert v.coherency == coherency(t)
    preset, finetuned = scoring_ctx.logit_pair.distributions(text.split())
    assert v.tale_like == tale_like(preset, finetuned)
    assert not v.partial


def test_missing_logit_pair_flags_partial(partial_ctx):
    v = score_text("The old king smiled at the dragon.", partial_ctx)
    assert v.tale_like == 0.0
    assert v.partial


def test_tale_like_positive_for_in_domain_text(scoring_ctx):
    # The unigram twin and the order-3 model disagree on any seen context.
    v = score_text("The old king smiled at the little dragon.", scoring_ctx)
    assert v.tale_like > 0.0


def test_all_fields_finite(scoring_ctx):
    for text in ("", "one", "Two words.", "A tale. " * 30):
        v = score_text(text, scoring_ctx)
        for value in v.as_tuple():
            assert value == pytest.approx(value)  # NaN fails its own equality

"""Sentiment filtering of candidate training stories."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from typing import TypeVar

from taletailor.metrics.lexicon import SentimentLexicon
from taletailor.metrics.scores import positivity
from taletailor.metrics.tokenizer import tokenize

logger = logging.getLogger(__name__)

T = TypeVar("T")


class LexiconSentimentScorer:
    """Maps a text to [0, 1]: 0.5 is neutral, 1 maximally positive.

    Mean word polarity lies in [-1, 1]; (1 + polarity) / 2 rescales it.  A
    desk-scale stand-in for a trained sentiment model, sharing the lexicon
    used by the positivity feature.
    """

    def __init__(self, lexicon: SentimentLexicon, stop_words: frozenset[str] | None = None):
        self.lexicon = lexicon
        self.stop_words = stop_words

    def __call__(self, text: str) -> float:
        polarity = positivity(tokenize(text, self.stop_words), self.lexicon)
        return (1.0 + polarity) / 2.0


def filter_by_sentiment(
    stories: Sequence[T],
    scorer: Callable[[str], float],
    threshold: float = 0.9,
    *,
    text_of: Callable[[T], str] = str,
) -> list[T]:
    """Keep stories scoring strictly above ``threshold``, preserving order.

    A story the scorer fails on is excluded and logged rather than aborting
    the batch.
    """
    kept: list[T] = []
    for story in stories:
        try:
            score = scorer(text_of(story))
        except Exception:
            logger.warning("sentiment scorer failed; story excluded", exc_info=True)
            continue
        if score > threshold:
            kept.append(story)
    return kept

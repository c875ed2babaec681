"""Four of the six per-text features: readability, positivity, diversity, simplicity.

Every score is a pure function of its inputs; higher is better for all of
them, which is why degenerate (empty) text is pushed down with the -10
substitutions instead of being scored 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from taletailor.metrics.frequent import FrequentWordSet
from taletailor.metrics.lexicon import SentimentLexicon
from taletailor.metrics.tokenizer import TokenizedText, words_of

# Substituted for a mean when there is nothing to average over.
EMPTY_PENALTY = -10.0


@dataclass(frozen=True)
class ReadabilityBreakdown:
    word_chars: float  # mean characters per word, or -10 when there are no words
    sent_words: float  # mean words per sentence, or -10 when there are no sentences


def readability_breakdown(t: TokenizedText) -> ReadabilityBreakdown:
    if t.words:
        word_chars = sum(len(w) for w in t.words) / len(t.words)
    else:
        word_chars = EMPTY_PENALTY
    if t.sentences:
        sent_words = sum(len(words_of(s)) for s in t.sentences) / len(t.sentences)
    else:
        sent_words = EMPTY_PENALTY
    return ReadabilityBreakdown(word_chars=word_chars, sent_words=sent_words)


def readability(t: TokenizedText) -> float:
    """0.5 * mean word length + mean sentence length (in words).

    The 0.5 factor weights sentence length above word length; empty text
    scores 0.5 * -10 + -10 = -15.
    """
    b = readability_breakdown(t)
    return 0.5 * b.word_chars + b.sent_words


def positivity(t: TokenizedText, lexicon: SentimentLexicon) -> float:
    """Mean (positive - negative) lexicon polarity over filtered words; 0 when empty."""
    if not t.filtered_words:
        return 0.0
    return sum(lexicon.polarity(w) for w in t.filtered_words) / len(t.filtered_words)


def diversity(t: TokenizedText) -> float:
    """Fraction of distinct filtered words; 0 when there are no filtered words."""
    if not t.filtered_words:
        return 0.0
    return len(set(t.filtered_words)) / len(t.filtered_words)


def simplicity(t: TokenizedText, frequent: FrequentWordSet) -> float:
    """Count of distinct filtered words that belong to the frequent-word set."""
    return float(len(set(t.filtered_words) & frequent.words))

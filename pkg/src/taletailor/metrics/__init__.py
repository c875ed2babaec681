"""Pure, stateless text scoring: six per-text features plus normalization."""

from taletailor.metrics.tokenizer import TokenizedText, default_stop_words, split_sentences, tokenize
from taletailor.metrics.lexicon import SentimentLexicon
from taletailor.metrics.frequent import FrequentWordSet
from taletailor.metrics.distributions import TokenDistribution, kl_divergence, tale_like
from taletailor.metrics.scores import (
    ReadabilityBreakdown,
    diversity,
    positivity,
    readability,
    readability_breakdown,
    simplicity,
)
from taletailor.metrics.coherency import coherency
from taletailor.metrics.normalize import min_max_normalize
from taletailor.metrics.context import FEATURE_NAMES, LogitPair, MetricVector, ScoringContext, score_text

__all__ = [
    "TokenizedText",
    "default_stop_words",
    "split_sentences",
    "tokenize",
    "SentimentLexicon",
    "FrequentWordSet",
    "TokenDistribution",
    "kl_divergence",
    "tale_like",
    "ReadabilityBreakdown",
    "readability",
    "readability_breakdown",
    "positivity",
    "diversity",
    "simplicity",
    "coherency",
    "min_max_normalize",
    "FEATURE_NAMES",
    "LogitPair",
    "MetricVector",
    "ScoringContext",
    "score_text",
]

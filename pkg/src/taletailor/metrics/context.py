"""Scoring context and the combined six-feature score vector."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import numpy as np

from taletailor.metrics.coherency import coherency
from taletailor.metrics.distributions import TokenDistribution, tale_like
from taletailor.metrics.frequent import FrequentWordSet
from taletailor.metrics.lexicon import SentimentLexicon
from taletailor.metrics.scores import diversity, positivity, readability, simplicity
from taletailor.metrics.tokenizer import TokenizedText, default_stop_words, tokenize

FEATURE_NAMES = ("readability", "positivity", "diversity", "simplicity", "coherency", "tale_like")

# Conventional file names inside a scoring-context directory.
STOPWORDS_FILE = "stopwords.txt"
LEXICON_FILE = "lexicon.tsv"
FREQUENT_WORDS_FILE = "frequent_words.txt"


@dataclass(frozen=True)
class MetricVector:
    """The six raw (unnormalized) feature scores of one text.

    ``partial`` marks vectors whose tale_like score defaulted to 0 because no
    logit provider pair was configured.
    """

    readability: float
    positivity: float
    diversity: float
    simplicity: float
    coherency: float
    tale_like: float
    partial: bool = False

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.readability, self.positivity, self.diversity, self.simplicity, self.coherency, self.tale_like)


class LogitSource(Protocol):
    def logits(self, tokens: list[str]) -> list[TokenDistribution]: ...


class LogitPair:
    """A (generic, fine-tuned) pair of next-token predictors.

    The two models may expose different vocabularies (e.g. two independently
    trained back-off models); distributions are re-indexed onto the union
    vocabulary before any divergence is computed.
    """

    def __init__(self, preset: LogitSource, finetuned: LogitSource):
        self.preset = preset
        self.finetuned = finetuned

    def distributions(self, tokens: list[str]) -> tuple[list[TokenDistribution], list[TokenDistribution]]:
        preset_dists = self.preset.logits(tokens)
        finetuned_dists = self.finetuned.logits(tokens)
        return _align(preset_dists, finetuned_dists)


def _align(
    left: list[TokenDistribution], right: list[TokenDistribution]
) -> tuple[list[TokenDistribution], list[TokenDistribution]]:
    if not left or not right:
        return left, right
    lvocab = left[0].vocabulary
    rvocab = right[0].vocabulary
    if lvocab == rvocab:
        return left, right
    if lvocab is None or rvocab is None:
        raise ValueError("cannot align distributions without vocabularies")
    union = tuple(sorted(set(lvocab) | set(rvocab)))
    position = {token: i for i, token in enumerate(union)}

    def remap(dists: list[TokenDistribution]) -> list[TokenDistribution]:
        out = []
        for d in dists:
            vec = np.zeros(len(union))
            for token, p in zip(d.vocabulary, d.probabilities):  # type: ignore[arg-type]
                vec[position[token]] += p
            out.append(TokenDistribution(vec, union))
        return out

    return remap(left), remap(right)


@dataclass
class ScoringContext:
    """Shared read-only resources needed to score a text on all six features."""

    lexicon: SentimentLexicon
    frequent_words: FrequentWordSet
    stop_words: frozenset[str]
    logit_pair: LogitPair | None = None

    @classmethod
    def build(
        cls,
        lexicon: SentimentLexicon | None = None,
        frequent_words: FrequentWordSet | None = None,
        stop_words: frozenset[str] | None = None,
        logit_pair: LogitPair | None = None,
    ) -> "ScoringContext":
        return cls(
            lexicon=lexicon or SentimentLexicon.empty(),
            frequent_words=frequent_words or FrequentWordSet.empty(),
            stop_words=stop_words if stop_words is not None else default_stop_words(),
            logit_pair=logit_pair,
        )

    @classmethod
    def load(cls, directory: str | Path, logit_pair: LogitPair | None = None) -> "ScoringContext":
        """Load lexicon / stop words / frequent words from a context directory.

        Missing files fall back to neutral defaults (empty lexicon, built-in
        stop words, empty frequent-word set).
        """
        directory = Path(directory)
        lexicon_path = directory / LEXICON_FILE
        stopwords_path = directory / STOPWORDS_FILE
        frequent_path = directory / FREQUENT_WORDS_FILE
        stop_words = default_stop_words()
        if stopwords_path.exists():
            stop_words = frozenset(
                w.strip().lower() for w in stopwords_path.read_text("utf-8").splitlines() if w.strip()
            )
        return cls(
            lexicon=SentimentLexicon.load(lexicon_path) if lexicon_path.exists() else SentimentLexicon.empty(),
            frequent_words=FrequentWordSet.load(frequent_path) if frequent_path.exists() else FrequentWordSet.empty(),
            stop_words=stop_words,
            logit_pair=logit_pair,
        )

    def tokenize(self, raw: str) -> TokenizedText:
        return tokenize(raw, self.stop_words)


def score_text(text: TokenizedText | str, ctx: ScoringContext) -> MetricVector:
    """All six raw feature scores of one text.

    Provider errors from the logit pair propagate; a missing pair yields
    tale_like = 0 and a vector flagged partial.
    """
    t = ctx.tokenize(text) if isinstance(text, str) else text

    tale_score = 0.0
    partial = False
    tokens = t.raw.split()
    if ctx.logit_pair is None:
        partial = True
    elif tokens:
        preset_dists, finetuned_dists = ctx.logit_pair.distributions(tokens)
        tale_score = tale_like(preset_dists, finetuned_dists)

    return MetricVector(
        readability=readability(t),
        positivity=positivity(t, ctx.lexicon),
        diversity=diversity(t),
        simplicity=simplicity(t, ctx.frequent_words),
        coherency=coherency(t),
        tale_like=tale_score,
        partial=partial,
    )

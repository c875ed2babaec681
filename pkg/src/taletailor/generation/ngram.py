"""Order-n back-off language model over whitespace tokens.

This is the fully offline stand-in for a neural text generator: cheap to
train, deterministic, and honest about being a count table.  Contexts unseen
at the full order back off to progressively shorter contexts, down to the
unigram distribution.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence

import numpy as np

from taletailor.metrics.distributions import TokenDistribution
from taletailor.metrics.tokenizer import split_sentences

# Sentence-boundary sentinel carried in training token streams; generation
# stops when it is sampled.
EOS_TOKEN = "<|eos|>"


class NGramModel:
    """Count tables for orders 1..n plus the shared vocabulary."""

    def __init__(self, order: int, level_counts: dict[int, dict[tuple[str, ...], Counter]], vocabulary: tuple[str, ...]):
        self.order = order
        self._levels = level_counts
        self.vocabulary = vocabulary
        self._token_ids = {token: i for i, token in enumerate(vocabulary)}
        self._vocab_key = vocabulary  # shared tuple keeps TokenDistribution alignment cheap

    @property
    def counts(self) -> dict[tuple[str, ...], Counter]:
        """The full-order count table: context -> next-token counter."""
        return self._levels[self.order]

    def token_id(self, token: str) -> int | None:
        return self._token_ids.get(token)

    def context_counts(self, context: Sequence[str]) -> Counter | None:
        """The deepest count table matching ``context``, or None (never for a trained model)."""
        ctx = tuple(context)
        for m in range(self.order, 0, -1):
            need = m - 1
            if len(ctx) < need:
                continue
            key = ctx[len(ctx) - need :] if need else ()
            table = self._levels[m]
            if key in table:
                return table[key]
        return None

    def distribution(self, context: Sequence[str]) -> TokenDistribution:
        """Conditional next-token distribution given ``context``.

        A context present in the full-order table yields its exact count
        ratios; otherwise the model backs off to the longest known suffix.
        """
        counter = self.context_counts(context)
        if counter is None:
            raise ValueError("model has no counts; was it trained on an empty corpus?")
        vec = np.zeros(len(self.vocabulary))
        for token, count in counter.items():
            vec[self._token_ids[token]] = count
        return TokenDistribution(vec / vec.sum(), self._vocab_key)

    def logits(self, tokens: Sequence[str]) -> list[TokenDistribution]:
        """One next-token distribution per position of ``tokens``.

        The distribution at position i conditions on tokens[..i]; unknown
        tokens simply fail the deeper context lookups and back off, bottoming
        out at the unigram table.
        """
        if not tokens:
            raise ValueError("tokens must be nonempty")
        out = []
        for i in range(len(tokens)):
            start = max(0, i + 1 - (self.order - 1)) if self.order > 1 else i + 1
            out.append(self.distribution(tokens[start : i + 1]))
        return out


def train_ngram(corpus: Iterable[Sequence[str]], order: int) -> NGramModel:
    """Count every window of length 1..order across the corpus sequences."""
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order!r}")
    levels: dict[int, dict[tuple[str, ...], Counter]] = {m: {} for m in range(1, order + 1)}
    vocabulary: set[str] = set()
    for sequence in corpus:
        seq = list(sequence)
        vocabulary.update(seq)
        for m in range(1, order + 1):
            table = levels[m]
            for i in range(len(seq) - m + 1):
                ctx = tuple(seq[i : i + m - 1])
                table.setdefault(ctx, Counter())[seq[i + m - 1]] += 1
    if not vocabulary:
        raise ValueError("cannot train on an empty corpus")
    return NGramModel(order, levels, tuple(sorted(vocabulary)))


def sentence_token_stream(text: str) -> list[str]:
    """Whitespace tokens of ``text`` with the EOS sentinel after each sentence.

    Pre-existing sentinel occurrences are dropped first, so re-streaming
    already-marked corpus lines never doubles the markers.
    """
    cleaned = " ".join(tok for tok in text.split() if tok != EOS_TOKEN)
    stream: list[str] = []
    for sentence in split_sentences(cleaned):
        stream.extend(sentence.split())
        stream.append(EOS_TOKEN)
    return stream

"""Building the frequent-word set from a corpus."""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable

from taletailor.corpus.clean import strip_sentinels
from taletailor.metrics.frequent import FrequentWordSet
from taletailor.metrics.tokenizer import tokenize


def build_frequent_words(
    texts: Iterable[str],
    fraction: float = 0.07,
    stop_words: frozenset[str] | None = None,
) -> FrequentWordSet:
    """Top ceil(fraction * |vocabulary|) content words by corpus frequency.

    Stop words are excluded before ranking; frequency ties are broken
    alphabetically so the set is reproducible.
    """
    if not (0.0 < fraction <= 1.0):
        raise ValueError(f"fraction must lie in (0, 1], got {fraction!r}")
    counts: Counter[str] = Counter()
    saw_text = False
    for text in texts:
        saw_text = True
        counts.update(tokenize(strip_sentinels(text), stop_words).filtered_words)
    if not saw_text:
        raise ValueError("corpus is empty")
    if not counts:
        raise ValueError("corpus contains no content words")
    # round() first so float dust (0.07 * 100 == 7.000000000000001) cannot
    # bump the ceiling to 8 when the decimal product is exactly 7.
    size = math.ceil(round(fraction * len(counts), 9))
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return FrequentWordSet(frozenset(word for word, _ in ranked[:size]), source_fraction=fraction)

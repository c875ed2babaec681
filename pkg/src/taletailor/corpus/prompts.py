"""Keyword prompt generation for corpus extracts.

Prompts are the top tf-idf content words of an extract measured against the
whole corpus, so each extract is prefixed with the words that most
distinguish it.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable

from taletailor.metrics.tokenizer import default_stop_words, tokenize


class DocumentFrequencies:
    """Document frequencies of content words across a corpus."""

    def __init__(self, documents: Iterable[str], stop_words: frozenset[str] | None = None):
        self.stop_words = stop_words if stop_words is not None else default_stop_words()
        self.df: Counter[str] = Counter()
        self.n_documents = 0
        for doc in documents:
            self.n_documents += 1
            self.df.update(set(tokenize(doc, self.stop_words).filtered_words))
        if self.n_documents == 0:
            raise ValueError("corpus must contain at least one document")

    def idf(self, term: str) -> float:
        # Unseen terms count as if they appeared in one document.
        return math.log(self.n_documents / max(self.df.get(term, 0), 1))


def keyword_prompt(
    extract: str,
    frequencies: DocumentFrequencies,
    k: int = 5,
    allowed_words: frozenset[str] | None = None,
) -> str:
    """Top-k content words of ``extract`` by tf-idf, highest weight first.

    Ties are broken alphabetically.  ``allowed_words`` optionally restricts
    candidates (e.g. to a tagger-produced noun list).  An extract of only
    stop words yields an empty prompt.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    tokens = tokenize(extract, frequencies.stop_words).filtered_words
    if allowed_words is not None:
        tokens = tuple(t for t in tokens if t in allowed_words)
    counts = Counter(tokens)
    weighted = [(count * frequencies.idf(term), term) for term, count in counts.items()]
    weighted.sort(key=lambda pair: (-pair[0], pair[1]))
    return " ".join(term for _, term in weighted[:k])

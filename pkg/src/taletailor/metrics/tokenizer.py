"""Sentence and word tokenization shared by the scoring metrics and corpus tooling.

The splitting rules are deliberately simple: the corpora this engine targets
are plain prose, so no abbreviation handling is attempted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

# A word is a run of letters/digits, optionally with an internal apostrophe
# ("don't", "cat's").  Punctuation never counts as a word.
_WORD_RE = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z0-9]+)*")

# Sentences end at ., ! or ? followed by whitespace (or end of text).
_SENTENCE_BREAK_RE = re.compile(r"(?<=[.!?])\s+")


@dataclass(frozen=True)
class TokenizedText:
    """A text together with its sentence, word and filtered-word views.

    ``filtered_words`` are lowercased words with stop words removed; pure
    punctuation never reaches the word list in the first place.
    """

    raw: str
    sentences: tuple[str, ...]
    words: tuple[str, ...]
    filtered_words: tuple[str, ...]


@lru_cache(maxsize=1)
def default_stop_words() -> frozenset[str]:
    """The built-in English stop-word list shipped with the package."""
    data = resources.files("taletailor.metrics").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(w.strip().lower() for w in data.splitlines() if w.strip())


def words_of(text: str) -> list[str]:
    """Word tokens of ``text`` (punctuation excluded)."""
    return _WORD_RE.findall(text)


def split_sentences(raw: str) -> list[str]:
    """Split ``raw`` into sentences.

    A chunk only counts as a sentence if it contains at least one word; a
    stretch of bare punctuation ("...") is degenerate text, not a sentence.
    """
    if not raw or not raw.strip():
        return []
    chunks = _SENTENCE_BREAK_RE.split(raw.strip())
    return [c.strip() for c in chunks if _WORD_RE.search(c)]


def tokenize(raw: str, stop_words: frozenset[str] | set[str] | None = None) -> TokenizedText:
    """Tokenize ``raw`` into sentences, words and stop-word-filtered words.

    Passing ``stop_words=None`` uses the built-in list; pass an empty set to
    disable filtering.
    """
    if stop_words is None:
        stop_words = default_stop_words()
    words = words_of(raw)
    filtered = [w.lower() for w in words if w.lower() not in stop_words]
    return TokenizedText(
        raw=raw,
        sentences=tuple(split_sentences(raw)),
        words=tuple(words),
        filtered_words=tuple(filtered),
    )

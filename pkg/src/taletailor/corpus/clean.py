"""Story cleaning and segmentation.

The cleaning pass is idempotent: running it on its own output changes
nothing, which lets ingestion re-run safely over partially processed data.
"""

from __future__ import annotations

import re
from collections.abc import Iterable

from taletailor.generation.ngram import EOS_TOKEN
from taletailor.metrics.tokenizer import split_sentences

# Typographic characters normalized before filtering.
_TRANSLATE = str.maketrans(
    {
        "‘": "'",
        "’": "'",
        "“": '"',
        "”": '"',
        "–": "-",
        "—": "-",
        "…": "...",
        " ": " ",
    }
)

# Keep letters, digits, whitespace and standard prose punctuation; everything
# else (control characters, symbols, markup leftovers) becomes a space.
_DISALLOWED_RE = re.compile(r"[^\w\s.,;:!?'\"()\-]|_", re.UNICODE)

_BLANK_RUN_RE = re.compile(r"[ \t]*\n[\s]*")
_SPACE_RUN_RE = re.compile(r"[ \t]+")

_GUTENBERG_START_RE = re.compile(r"\*\*\*\s*START OF (?:THE|THIS) PROJECT GUTENBERG EBOOK[^*]*\*\*\*", re.IGNORECASE)
_GUTENBERG_END_RE = re.compile(r"\*\*\*\s*END OF (?:THE|THIS) PROJECT GUTENBERG EBOOK[^*]*\*\*\*", re.IGNORECASE)


def strip_gutenberg_boilerplate(text: str) -> str:
    """Drop everything outside the standard START/END project markers."""
    start = _GUTENBERG_START_RE.search(text)
    if start:
        text = text[start.end() :]
    end = _GUTENBERG_END_RE.search(text)
    if end:
        text = text[: end.start()]
    return text


def _remove_offensive(text: str, offensive: Iterable[str]) -> str:
    words = [re.escape(w) for w in offensive if w]
    if not words:
        return text
    pattern = re.compile(r"\b(?:" + "|".join(words) + r")\b", re.IGNORECASE)
    return pattern.sub(" ", text)


def _trim_words(text: str, max_words: int) -> str:
    count = 0
    end = None
    for match in re.finditer(r"\S+", text):
        count += 1
        if count == max_words:
            end = match.end()
        elif count > max_words:
            break
    if count <= max_words or end is None:
        return text
    return text[:end]


def clean_text(raw: str, offensive_words: Iterable[str] = (), max_words: int = 1000) -> str:
    """Normalize punctuation, strip special symbols and offensive words,
    collapse whitespace, and trim to ``max_words`` at a word boundary."""
    text = raw.translate(_TRANSLATE)
    text = _DISALLOWED_RE.sub(" ", text)
    text = _remove_offensive(text, offensive_words)
    text = _BLANK_RUN_RE.sub("\n", text)
    text = _SPACE_RUN_RE.sub(" ", text)
    text = "\n".join(line.strip() for line in text.split("\n")).strip()
    return _trim_words(text, max_words)


def segment_extracts(text: str, limit: int = 500) -> list[str]:
    """Greedy sentence-boundary segmentation into extracts of <= limit tokens.

    Tokens are whitespace-delimited words.  A single sentence longer than the
    limit is hard-split at the limit.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    extracts: list[str] = []
    current: list[str] = []
    current_tokens = 0

    def flush() -> None:
        nonlocal current, current_tokens
        if current:
            extracts.append(" ".join(current))
            current = []
            current_tokens = 0

    for sentence in split_sentences(text):
        tokens = sentence.split()
        if len(tokens) > limit:
            flush()
            for start in range(0, len(tokens), limit):
                extracts.append(" ".join(tokens[start : start + limit]))
            continue
        if current_tokens + len(tokens) > limit:
            flush()
        current.append(sentence)
        current_tokens += len(tokens)
    flush()
    return extracts


def strip_sentinels(text: str) -> str:
    """Drop EOS sentinel tokens; they are markup, not story vocabulary."""
    return " ".join(tok for tok in text.split() if tok != EOS_TOKEN)


def merge_prompt_story(prompt: str, story: str) -> str:
    """Training sample: prompt, sentinel, story, sentinel."""
    parts = ([prompt] if prompt else []) + [EOS_TOKEN, story, EOS_TOKEN]
    return " ".join(parts)


def split_prompt_story(sample: str) -> tuple[str, str]:
    """Inverse of merge_prompt_story (modulo surrounding whitespace)."""
    pieces = [p.strip() for p in sample.split(EOS_TOKEN)]
    if len(pieces) < 2:
        raise ValueError("sample does not contain the sentinel")
    return pieces[0], pieces[1]

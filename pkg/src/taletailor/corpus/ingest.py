"""End-to-end corpus ingestion: raw stories to validated JSONL extracts."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from collections.abc import Callable, Iterable, Sequence

from taletailor.corpus.clean import clean_text, segment_extracts, strip_gutenberg_boilerplate
from taletailor.corpus.prompts import DocumentFrequencies, keyword_prompt
from taletailor.corpus.sentiment import filter_by_sentiment
from taletailor.generation.ngram import EOS_TOKEN

SOURCES = ("gutenberg", "reddit")

_CONTROL_RE = re.compile(r"[\x00-\x08\x0b\x0c\x0e-\x1f\x7f]")


@dataclass(frozen=True)
class RawStory:
    source: str
    body: str
    prompt: str | None = None

    def __post_init__(self) -> None:
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}, got {self.source!r}")
        if not self.body:
            raise ValueError("story body is empty")


@dataclass(frozen=True)
class CleanExtract:
    """One training extract: keyword prompt, sentinel-terminated body, token count."""

    prompt: str
    body: str
    token_count: int


def load_stories(src: str | Path, source: str) -> list[RawStory]:
    """Load stories from a directory of .txt files (gutenberg) or a TSV file
    of prompt<TAB>story lines (reddit)."""
    src = Path(src)
    stories: list[RawStory] = []
    if source == "gutenberg":
        paths = sorted(src.glob("*.txt")) if src.is_dir() else [src]
        for path in paths:
            body = strip_gutenberg_boilerplate(path.read_text("utf-8"))
            if body.strip():
                stories.append(RawStory(source="gutenberg", body=body))
    elif source == "reddit":
        for lineno, line in enumerate(src.read_text("utf-8").splitlines(), start=1):
            if not line.strip():
                continue
            if "\t" not in line:
                raise ValueError(f"{src}:{lineno}: expected prompt<TAB>story")
            prompt, body = line.split("\t", 1)
            if body.strip():
                stories.append(RawStory(source="reddit", body=body, prompt=prompt.strip() or None))
    else:
        raise ValueError(f"unknown source format {source!r}")
    return stories


def validate_extract(extract: CleanExtract, offensive_words: Iterable[str] = (), limit: int = 500) -> None:
    """Raise ValueError if an extract violates its invariants."""
    if _CONTROL_RE.search(extract.body) or _CONTROL_RE.search(extract.prompt):
        raise ValueError("extract contains control characters")
    if not extract.body.endswith(EOS_TOKEN):
        raise ValueError("extract body does not end with the sentinel")
    content_tokens = [t for t in extract.body.split() if t != EOS_TOKEN]
    if len(content_tokens) != extract.token_count:
        raise ValueError(f"token_count {extract.token_count} does not match body ({len(content_tokens)})")
    if extract.token_count > limit:
        raise ValueError(f"extract exceeds {limit} tokens")
    lowered = {t.lower().strip(".,;:!?'\"()-") for t in content_tokens}
    banned = {w.lower() for w in offensive_words} & lowered
    if banned:
        raise ValueError(f"extract contains offensive words: {sorted(banned)}")


def prepare_corpus(
    stories: Sequence[RawStory],
    *,
    offensive_words: Iterable[str] = (),
    stop_words: frozenset[str] | None = None,
    sentiment_scorer: Callable[[str], float] | None = None,
    sentiment_threshold: float = 0.9,
    max_story_words: int = 1000,
    extract_limit: int = 500,
    keyword_count: int = 5,
) -> list[CleanExtract]:
    """Clean, filter, segment and prompt-augment a story collection.

    Stories that arrive with their own prompt keep it (cleaned); the rest get
    generated keyword prompts weighted against the whole extract corpus.
    """
    offensive = tuple(offensive_words)
    cleaned: list[tuple[str | None, str]] = []
    for story in stories:
        body = clean_text(story.body, offensive, max_story_words)
        if not body:
            continue
        prompt = clean_text(story.prompt, offensive, max_story_words) if story.prompt else None
        cleaned.append((prompt, body))

    if sentiment_scorer is not None:
        cleaned = filter_by_sentiment(
            cleaned, sentiment_scorer, sentiment_threshold, text_of=lambda pair: pair[1]
        )

    segments: list[tuple[str | None, str]] = []
    for prompt, body in cleaned:
        for segment in segment_extracts(body, extract_limit):
            segments.append((prompt, segment))
    if not segments:
        return []

    frequencies = DocumentFrequencies((seg for _, seg in segments), stop_words)
    extracts = []
    for prompt, segment in segments:
        if prompt is None:
            prompt = keyword_prompt(segment, frequencies, keyword_count)
        extracts.append(
            CleanExtract(
                prompt=prompt,
                body=f"{segment} {EOS_TOKEN}",
                token_count=len(segment.split()),
            )
        )
    for extract in extracts:
        validate_extract(extract, offensive, extract_limit)
    return extracts


def write_extracts_jsonl(extracts: Iterable[CleanExtract], path: str | Path) -> None:
    """One extract per line; keys sorted so output is byte-reproducible."""
    with open(path, "w", encoding="utf-8") as fh:
        for e in extracts:
            record = {"prompt": e.prompt, "body": e.body, "token_count": e.token_count}
            fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")


def read_extracts_jsonl(path: str | Path) -> list[CleanExtract]:
    extracts = []
    for line in Path(path).read_text("utf-8").splitlines():
        if not line.strip():
            continue
        record = json.loads(line)
        extracts.append(
            CleanExtract(prompt=record["prompt"], body=record["body"], token_count=record["token_count"])
        )
    return extracts


def load_offensive_words(path: str | Path) -> tuple[str, ...]:
    """One word per UTF-8 line; no list ships built in."""
    return tuple(
        w.strip().lower() for w in Path(path).read_text("utf-8").splitlines() if w.strip()
    )

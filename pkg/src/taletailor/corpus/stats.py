"""Corpus statistics: sentence-count distribution and vocabulary frequencies.

The report path writes plot-ready TSVs plus rendered PNG figures so a corpus
can be eyeballed for length balance and vocabulary diversity before any
model is trained on it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from collections.abc import Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from taletailor.corpus.clean import strip_sentinels
from taletailor.metrics.tokenizer import split_sentences, words_of


@dataclass
class CorpusStats:
    sentence_counts: list[int]  # per story, in corpus order
    histogram: dict[int, int]  # sentence count -> number of stories
    frequencies: Counter  # lowercased word -> occurrences
    total_tokens: int
    once_fraction: float  # fraction of the vocabulary occurring exactly once

    @property
    def mean_sentences(self) -> float:
        if not self.sentence_counts:
            return 0.0
        return sum(self.sentence_counts) / len(self.sentence_counts)

    @property
    def vocabulary_size(self) -> int:
        return len(self.frequencies)


def corpus_stats(texts: Iterable[str]) -> CorpusStats:
    """Sentence counts per story plus the full word-frequency table."""
    sentence_counts: list[int] = []
    frequencies: Counter[str] = Counter()
    for text in texts:
        text = strip_sentinels(text)
        sentence_counts.append(len(split_sentences(text)))
        frequencies.update(w.lower() for w in words_of(text))
    if not sentence_counts:
        raise ValueError("corpus is empty")
    total = sum(frequencies.values())
    once = sum(1 for c in frequencies.values() if c == 1)
    once_fraction = once / len(frequencies) if frequencies else 0.0
    histogram = Counter(sentence_counts)
    return CorpusStats(
        sentence_counts=sentence_counts,
        histogram=dict(sorted(histogram.items())),
        frequencies=frequencies,
        total_tokens=total,
        once_fraction=once_fraction,
    )


def write_stats_tsv(stats: CorpusStats, path: str | Path) -> None:
    """Summary block plus the sentence-count histogram, tab-separated."""
    lines = [
        f"stories\t{len(stats.sentence_counts)}",
        f"total_tokens\t{stats.total_tokens}",
        f"vocabulary_size\t{stats.vocabulary_size}",
        f"mean_sentences\t{stats.mean_sentences:.6f}",
        f"once_fraction\t{stats.once_fraction:.6f}",
        "",
        "sentence_count\tstories",
    ]
    lines += [f"{count}\t{n}" for count, n in stats.histogram.items()]
    Path(path).write_text("\n".join(lines) + "\n", "utf-8")


def write_frequencies_tsv(stats: CorpusStats, path: str | Path) -> None:
    """Full frequency table, most frequent first, ties alphabetical."""
    ranked = sorted(stats.frequencies.items(), key=lambda item: (-item[1], item[0]))
    lines = ["word\tcount"] + [f"{word}\t{count}" for word, count in ranked]
    Path(path).write_text("\n".join(lines) + "\n", "utf-8")


def render_figures(stats: CorpusStats, out_dir: str | Path, top_n: int = 50) -> list[Path]:
    """Render the sentence-count histogram and frequency extremes as PNGs."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.hist(stats.sentence_counts, bins=min(30, max(5, len(set(stats.sentence_counts)))), color="#4878a8")
    ax.set_xlabel("sentences per story")
    ax.set_ylabel("stories")
    ax.set_title(f"Sentence counts (mean {stats.mean_sentences:.1f})")
    path = out_dir / "sentence_counts.png"
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    ranked = sorted(stats.frequencies.items(), key=lambda item: (-item[1], item[0]))
    for name, rows, title in (
        ("most_frequent_words.png", ranked[:top_n], f"Top {top_n} most frequent words"),
        ("least_frequent_words.png", ranked[-top_n:][::-1], f"{top_n} least frequent words"),
    ):
        if not rows:
            continue
        words = [w for w, _ in rows]
        counts = [c for _, c in rows]
        fig, ax = plt.subplots(figsize=(7, max(3, 0.18 * len(rows))))
        ax.barh(range(len(rows)), counts, color="#4878a8")
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels(words, fontsize=6)
        ax.invert_yaxis()
        ax.set_xlabel("occurrences")
        ax.set_title(title)
        path = out_dir / name
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    return written

"""Sentiment lexicon in the public SentiWordNet 3.0 tab-separated layout.

Each data line is ``POS<TAB>ID<TAB>PosScore<TAB>NegScore<TAB>SynsetTerms<TAB>Gloss``
where SynsetTerms is a space-separated list of ``term#sense`` entries.  Lines
starting with ``#`` are comments.  A word that appears in several synsets
gets the average of its scores; a word absent from the lexicon is neutral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class SentimentLexicon:
    # (word, pos) -> (positive, negative); pos=None aggregates across POS tags
    entries: dict[tuple[str, str | None], tuple[float, float]] = field(default_factory=dict)

    def scores(self, word: str, pos: str | None = None) -> tuple[float, float]:
        """(positive, negative) scores for ``word``; (0, 0) when unknown."""
        return self.entries.get((word.lower(), pos), (0.0, 0.0))

    def polarity(self, word: str, pos: str | None = None) -> float:
        positive, negative = self.scores(word, pos)
        return positive - negative

    def __len__(self) -> int:
        return sum(1 for (_, pos) in self.entries if pos is None)

    @classmethod
    def empty(cls) -> "SentimentLexicon":
        return cls()

    @classmethod
    def load(cls, path: str | Path) -> "SentimentLexicon":
        sums: dict[tuple[str, str | None], list[float]] = {}

        def accumulate(key: tuple[str, str | None], pos_score: float, neg_score: float) -> None:
            bucket = sums.setdefault(key, [0.0, 0.0, 0.0])
            bucket[0] += pos_score
            bucket[1] += neg_score
            bucket[2] += 1.0

        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) < 5:
                    raise ValueError(f"{path}:{lineno}: expected at least 5 tab-separated fields")
                pos_tag, _, pos_raw, neg_raw, terms = parts[0], parts[1], parts[2], parts[3], parts[4]
                try:
                    pos_score = float(pos_raw)
                    neg_score = float(neg_raw)
                except ValueError as exc:
                    raise ValueError(f"{path}:{lineno}: non-numeric sentiment score") from exc
                if not (0.0 <= pos_score <= 1.0 and 0.0 <= neg_score <= 1.0):
                    raise ValueError(f"{path}:{lineno}: scores must lie in [0, 1]")
                for term in terms.split():
                    word = term.rsplit("#", 1)[0].lower()
                    if not word:
                        continue
                    accumulate((word, pos_tag), pos_score, neg_score)
                    accumulate((word, None), pos_score, neg_score)

        entries = {key: (p / n, q / n) for key, (p, q, n) in sums.items()}
        return cls(entries)

"""Frequent-word set used by the simplicity feature."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class FrequentWordSet:
    """Lowercased high-frequency vocabulary; membership is case-insensitive."""

    words: frozenset[str]
    source_fraction: float = 0.07

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def empty(cls) -> "FrequentWordSet":
        return cls(frozenset())

    @classmethod
    def load(cls, path: str | Path, source_fraction: float = 0.07) -> "FrequentWordSet":
        """One word per UTF-8 line; blank lines ignored."""
        text = Path(path).read_text("utf-8")
        return cls(frozenset(w.strip().lower() for w in text.splitlines() if w.strip()), source_fraction)

    def save(self, path: str | Path) -> None:
        Path(path).write_text("\n".join(sorted(self.words)) + "\n", "utf-8")

"""Visual-consistency score over per-image classification distributions.

A story whose images a classifier describes the same way is visually
coherent; the score sums the symmetrized KL divergence over every unordered
image pair, so lower is better and 0 means all distributions agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from collections.abc import Sequence
from typing import TypeVar

import numpy as np

from taletailor.metrics.distributions import kl_divergence

_SUM_TOLERANCE = 1e-9

T = TypeVar("T")


@dataclass(frozen=True)
class ClassDistribution:
    """An image's probability vector over a fixed class taxonomy."""

    image_id: str
    probabilities: np.ndarray

    def __post_init__(self) -> None:
        probs = np.asarray(self.probabilities, dtype=np.float64)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("class probabilities must be a nonempty 1-D vector")
        if np.any(probs < 0) or not np.all(np.isfinite(probs)):
            raise ValueError("class probabilities must be finite and nonnegative")
        if abs(float(probs.sum()) - 1.0) > _SUM_TOLERANCE:
            raise ValueError(f"class probabilities sum to {float(probs.sum())!r}, not 1")
        object.__setattr__(self, "probabilities", probs)


def consistency(dists: Sequence[ClassDistribution]) -> float:
    """Sum over unordered pairs {i, j} of KL(i||j) + KL(j||i); lower is better.

    Fewer than two images is trivially consistent (0).  All distributions
    must share one taxonomy.
    """
    if len(dists) < 2:
        return 0.0
    sizes = {d.probabilities.size for d in dists}
    if len(sizes) != 1:
        raise ValueError(f"class taxonomies differ in size: {sorted(sizes)}")
    total = 0.0
    for a, b in combinations(dists, 2):
        total += kl_divergence(a.probabilities, b.probabilities)
        total += kl_divergence(b.probabilities, a.probabilities)
    return total


def rank_stories_by_consistency(
    stories: Sequence[tuple[T, Sequence[ClassDistribution]]],
) -> list[tuple[T, float | None]]:
    """Order stories by ascending consistency score.

    Stories without images carry no evidence of visual coherence and sort
    after every image-bearing story (score None), keeping their input order.
    """
    scored: list[tuple[T, float | None]] = []
    empty: list[tuple[T, float | None]] = []
    for story, dists in stories:
        if len(dists) == 0:
            empty.append((story, None))
        else:
            scored.append((story, consistency(dists)))
    scored.sort(key=lambda pair: pair[1])  # type: ignore[arg-type, return-value]
    return scored + empty


def load_class_distributions(path: str | Path) -> dict[str, ClassDistribution]:
    """TSV of image-id followed by class probabilities, one image per line."""
    table: dict[str, ClassDistribution] = {}
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise ValueError(f"{path}:{lineno}: expected an id and at least one probability")
        image_id = parts[0]
        try:
            probs = np.asarray([float(x) for x in parts[1:]], dtype=np.float64)
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: non-numeric probability") from exc
        table[image_id] = ClassDistribution(image_id, probs)
    return table

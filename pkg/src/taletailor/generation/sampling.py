"""Nucleus (top-p) and top-k sampling over token distributions."""

from __future__ import annotations

import numpy as np

from taletailor.generation.rng import SplitMix64
from taletailor.metrics.distributions import TokenDistribution

# Guards against the cumulative float sum landing a hair under p.
_CUM_SLACK = 1e-12


def _descending_order(probs: np.ndarray) -> np.ndarray:
    # Stable sort on -p keeps ascending token id among equal probabilities.
    return np.argsort(-probs, kind="stable")


def _draw(probs: np.ndarray, candidate_ids: np.ndarray, rng: SplitMix64) -> int:
    weights = probs[candidate_ids]
    total = float(weights.sum())
    if total <= 0.0:
        raise ValueError("truncated support carries no probability mass")
    target = rng.random() * total
    acc = 0.0
    for token_id, w in zip(candidate_ids, weights):
        acc += float(w)
        if target < acc:
            return int(token_id)
    # Float round-off pushed target past the last increment; take the last
    # token that actually carries mass.
    for token_id in reversed(candidate_ids):
        if probs[token_id] > 0:
            return int(token_id)
    raise ValueError("truncated support carries no probability mass")


def nucleus_sample(dist: TokenDistribution, p: float, rng: SplitMix64) -> int:
    """Sample a token id from the smallest probability-mass prefix >= p.

    Tokens are considered in descending probability (ties by token id); the
    kept prefix is renormalized before sampling.
    """
    if not (0.0 < p <= 1.0):
        raise ValueError(f"nucleus threshold must lie in (0, 1], got {p!r}")
    probs = dist.probabilities
    order = _descending_order(probs)
    cum = 0.0
    cutoff = order.size
    for i, token_id in enumerate(order):
        cum += float(probs[token_id])
        if cum >= p - _CUM_SLACK:
            cutoff = i + 1
            break
    return _draw(probs, order[:cutoff], rng)


def top_k_sample(dist: TokenDistribution, k: int, rng: SplitMix64) -> int:
    """Sample a token id from the k most probable tokens, renormalized."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k!r}")
    probs = dist.probabilities
    order = _descending_order(probs)
    return _draw(probs, order[: min(k, order.size)], rng)

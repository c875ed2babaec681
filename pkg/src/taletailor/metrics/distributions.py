"""Token probability distributions and the KL-divergence scores built on them."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

# Floor for probabilities inside logs; keeps the divergence finite when one
# model assigns (numerically) zero mass where the other does not.
EPSILON = 1e-12

_SUM_TOLERANCE = 1e-9


class TokenDistribution:
    """A probability vector over a vocabulary.

    Probabilities must be nonnegative and sum to 1 within 1e-9.  An optional
    vocabulary (one token name per entry) travels with the vector so that
    distributions from different models can be aligned.
    """

    __slots__ = ("probabilities", "vocabulary")

    def __init__(self, probabilities: Sequence[float] | np.ndarray, vocabulary: tuple[str, ...] | None = None):
        probs = np.asarray(probabilities, dtype=np.float64)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("a distribution must be a nonempty 1-D vector")
        if not np.all(np.isfinite(probs)):
            raise ValueError("distribution contains non-finite values")
        if np.any(probs < 0):
            raise ValueError("probabilities must be nonnegative")
        total = float(probs.sum())
        if abs(total - 1.0) > _SUM_TOLERANCE:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        if vocabulary is not None and len(vocabulary) != probs.size:
            raise ValueError("vocabulary length does not match the probability vector")
        self.probabilities = probs
        self.vocabulary = vocabulary

    @classmethod
    def from_logits(cls, logits: Sequence[float] | np.ndarray, vocabulary: tuple[str, ...] | None = None) -> "TokenDistribution":
        z = np.asarray(logits, dtype=np.float64)
        z = z - z.max()
        expz = np.exp(z)
        return cls(expz / expz.sum(), vocabulary)

    def __len__(self) -> int:
        return int(self.probabilities.size)

    def __repr__(self) -> str:  # pragma: no cover
        return f"TokenDistribution(n={len(self)})"


def kl_divergence(q: TokenDistribution | np.ndarray, p: TokenDistribution | np.ndarray) -> float:
    """D_KL(q || p) = sum_v q(v) * (ln q(v) - ln p(v)), in nats.

    Zero-probability terms of ``q`` contribute nothing; ``p`` is clamped to
    EPSILON inside the log so the result stays finite.
    """
    qv = q.probabilities if isinstance(q, TokenDistribution) else np.asarray(q, dtype=np.float64)
    pv = p.probabilities if isinstance(p, TokenDistribution) else np.asarray(p, dtype=np.float64)
    if qv.shape != pv.shape:
        raise ValueError(f"distribution sizes differ: {qv.shape} vs {pv.shape}")
    mask = qv > 0
    qm = qv[mask]
    pm = np.maximum(pv[mask], EPSILON)
    return float(np.sum(qm * (np.log(qm) - np.log(pm))))


def tale_like(
    dists_preset: Sequence[TokenDistribution],
    dists_finetuned: Sequence[TokenDistribution],
) -> float:
    """How far the fine-tuned model's predictions drift from the generic one.

    The score is the mean over token positions of D_KL(finetuned || preset).
    Larger means the text looks more like the fine-tuned model's home domain;
    identical prediction sequences score 0.
    """
    if len(dists_preset) != len(dists_finetuned):
        raise ValueError(
            f"distribution lists differ in length: {len(dists_preset)} vs {len(dists_finetuned)}"
        )
    if not dists_preset:
        raise ValueError("need at least one token position")
    per_position = [kl_divergence(q, p) for p, q in zip(dists_preset, dists_finetuned)]
    return float(sum(per_position) / len(per_position))

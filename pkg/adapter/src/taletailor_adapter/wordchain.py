"""Self-contained causal word-chain language model.

A deliberately small stand-in for a neural causal LM: order-n counts with
whole-context back-off, nucleus/top-k sampling, and an integer PRNG so every
(request, seed) pair reproduces bit-for-bit.  Generation stops at the
sentence sentinel "<|eos|>" carried in the training stream.
"""

from __future__ import annotations

import re
from collections import Counter
from pathlib import Path

import numpy as np

EOS = "<|eos|>"

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

_SENTENCE_RE = re.compile(r"(?<=[.!?])\s+")


def _mix(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class Stream:
    """SplitMix64 stream; child streams derive from (seed, *indices)."""

    def __init__(self, seed: int, *indices: int):
        state = seed & _MASK
        for index in indices:
            state = _mix((state + (index + 1) * _GAMMA) & _MASK)
        self._state = state

    def next_float(self) -> float:
        self._state = (self._state + _GAMMA) & _MASK
        return (_mix(self._state) >> 11) * (2.0**-53)


def sentence_stream(text: str) -> list[str]:
    tokens: list[str] = []
    for sentence in _SENTENCE_RE.split(text.strip()):
        words = [w for w in sentence.split() if w != EOS]
        if not words:
            continue
        tokens.extend(words)
        tokens.append(EOS)
    return tokens


class WordChain:
    """Order-n word chain with back-off to shorter contexts."""

    def __init__(self, order: int, corpus_text: str):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self._levels: dict[int, dict[tuple[str, ...], Counter]] = {m: {} for m in range(1, order + 1)}
        stream = sentence_stream(corpus_text)
        if not stream:
            raise ValueError("corpus is empty")
        for m in range(1, order + 1):
            table = self._levels[m]
            for i in range(len(stream) - m + 1):
                ctx = tuple(stream[i : i + m - 1])
                table.setdefault(ctx, Counter())[stream[i + m - 1]] += 1
        self.vocabulary: tuple[str, ...] = tuple(sorted(set(stream)))
        self._ids = {t: i for i, t in enumerate(self.vocabulary)}

    @classmethod
    def from_file(cls, path: str | Path, order: int) -> "WordChain":
        return cls(order, Path(path).read_text("utf-8"))

    def distribution(self, context: list[str]) -> np.ndarray:
        for m in range(self.order, 0, -1):
            need = m - 1
            if len(context) < need:
                continue
            key = tuple(context[len(context) - need :]) if need else ()
            counter = self._levels[m].get(key)
            if counter is not None:
                vec = np.zeros(len(self.vocabulary))
                for token, count in counter.items():
                    vec[self._ids[token]] = count
                return vec / vec.sum()
        raise RuntimeError("unreachable: unigram table always matches")

    def logits(self, tokens: list[str]) -> list[np.ndarray]:
        if not tokens:
            raise ValueError("tokens must be nonempty")
        out = []
        for i in range(len(tokens)):
            start = max(0, i + 1 - (self.order - 1)) if self.order > 1 else i + 1
            out.append(self.distribution(tokens[start : i + 1]))
        return out

    def _sample(self, probs: np.ndarray, mode: str, p: float, k: int, rng: Stream) -> int:
        order_desc = np.argsort(-probs, kind="stable")
        if mode == "top_k":
            kept = order_desc[: min(max(k, 1), order_desc.size)]
        else:
            cum = 0.0
            cutoff = order_desc.size
            for i, token_id in enumerate(order_desc):
                cum += float(probs[token_id])
                if cum >= p - 1e-12:
                    cutoff = i + 1
                    break
            kept = order_desc[:cutoff]
        weights = probs[kept]
        target = rng.next_float() * float(weights.sum())
        acc = 0.0
        for token_id, w in zip(kept, weights):
            acc += float(w)
            if target < acc:
                return int(token_id)
        for token_id in reversed(kept):
            if probs[token_id] > 0:
                return int(token_id)
        raise ValueError("no probability mass in truncated support")

    def complete(self, context: str, n: int, mode: str, p: float, k: int, max_tokens: int, seed: int) -> list[str]:
        base = [t for t in context.split() if t != EOS]
        candidates = []
        for index in range(n):
            rng = Stream(seed, index)
            tokens = list(base)
            out: list[str] = []
            for _ in range(max_tokens):
                window = tokens[-(self.order - 1) :] if self.order > 1 else []
                token = self.vocabulary[self._sample(self.distribution(window), mode, p, k, rng)]
                if token == EOS:
                    break
                out.append(token)
                tokens.append(token)
            candidates.append(" ".join(out))
        return candidates

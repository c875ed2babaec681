"""Deterministic hashing bag-of-words text embedder.

This is the offline stand-in for a neural text encoder: each lowercased word
token is hashed with BLAKE2b to a (bucket, sign) pair and the signed counts
are L2-normalized.  The projection is documented here precisely so tests can
recompute vectors independently:

    h      = little-endian uint64 of blake2b(token, digest_size=8)
    bucket = h % dim
    sign   = +1 if the top bit of h is 0 else -1
    v[bucket] += sign;  v /= ||v||

A text with no word tokens maps to the first basis vector.
"""

from __future__ import annotations

import hashlib
import re

import numpy as np

_TOKEN_RE = re.compile(r"[a-z0-9]+(?:'[a-z0-9]+)*")

DEFAULT_DIM = 256


def _token_hash(token: str) -> int:
    return int.from_bytes(hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest(), "little")


class HashEmbedder:
    def __init__(self, dim: int = DEFAULT_DIM):
        if dim < 1:
            raise ValueError("embedding dimension must be positive")
        self.dim = dim

    def embed_one(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dim)
        for token in _TOKEN_RE.findall(text.lower()):
            h = _token_hash(token)
            sign = 1.0 if (h >> 63) & 1 == 0 else -1.0
            vec[h % self.dim] += sign
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            vec[0] = 1.0
            return vec
        return vec / norm

    def embed(self, texts: list[str]) -> list[np.ndarray]:
        return [self.embed_one(t) for t in texts]

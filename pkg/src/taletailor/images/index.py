"""Unit-norm embedding index with exact cosine top-k retrieval.

Index files use the TTIX binary layout:

    magic "TTIX" | u32 LE version | u32 LE dim | u64 LE count
    per entry: u16 LE id-length | UTF-8 id | dim * f32 LE

Retrieval is an exact scan -- at desk scale a brute-force dot product is
both fast enough and trivially testable against itself.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from pathlib import Path
from collections.abc import Iterable, Mapping

import numpy as np

MAGIC = b"TTIX"
VERSION = 1

_NORM_TOLERANCE = 1e-6


class IndexFormatError(Exception):
    """The file is not a readable TTIX index."""


class TruncatedIndexError(IndexFormatError):
    """The file ended before the declared entry count was read."""


class NonFiniteVectorError(IndexFormatError):
    """An entry holds NaN/inf components or has zero length."""


class DimensionMismatchError(IndexFormatError):
    """Vector width disagrees with the declared dimension."""


@dataclass
class EmbeddingIndex:
    dim: int
    ids: tuple[str, ...]
    matrix: np.ndarray  # (len(ids), dim) float32, rows unit-norm
    metadata: dict[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.ids)

    def vector(self, image_id: str) -> np.ndarray:
        return self.matrix[self.ids.index(image_id)]

    def attribution(self, image_id: str) -> str:
        return self.metadata.get(image_id, "")


@dataclass(frozen=True)
class RetrievalResult:
    """Ranked (image-id, cosine score) pairs, scores non-increasing."""

    results: tuple[tuple[str, float], ...]

    def ids(self) -> tuple[str, ...]:
        return tuple(image_id for image_id, _ in self.results)

    def __len__(self) -> int:
        return len(self.results)


def write_index(path: str | Path, entries: Mapping[str, np.ndarray] | Iterable[tuple[str, np.ndarray]], dim: int) -> None:
    """Write entries as a TTIX file; vectors are stored as given (float32)."""
    items = entries.items() if isinstance(entries, Mapping) else list(entries)
    items = list(items)
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<IIQ", VERSION, dim, len(items)))
        for image_id, vector in items:
            vec = np.asarray(vector, dtype=np.float32)
            if vec.shape != (dim,):
                raise DimensionMismatchError(f"entry {image_id!r} has shape {vec.shape}, expected ({dim},)")
            encoded = image_id.encode("utf-8")
            if len(encoded) > 0xFFFF:
                raise IndexFormatError(f"id too long: {image_id!r}")
            fh.write(struct.pack("<H", len(encoded)))
            fh.write(encoded)
            fh.write(vec.tobytes())


def _read_exact(fh, n: int, what: str) -> bytes:
    data = fh.read(n)
    if len(data) != n:
        raise TruncatedIndexError(f"file ended while reading {what}")
    return data


def load_index(path: str | Path, attributions: Mapping[str, str] | None = None) -> EmbeddingIndex:
    """Load and validate a TTIX file, normalizing any non-unit vectors.

    Vectors already unit-norm (within 1e-6) are kept bit-for-bit; others are
    rescaled.  Non-finite or zero vectors are rejected.
    """
    with open(path, "rb") as fh:
        if _read_exact(fh, 4, "magic") != MAGIC:
            raise IndexFormatError(f"{path}: bad magic, not a TTIX file")
        version, dim, count = struct.unpack("<IIQ", _read_exact(fh, 16, "header"))
        if version != VERSION:
            raise IndexFormatError(f"{path}: unsupported version {version}")
        if dim < 1:
            raise IndexFormatError(f"{path}: non-positive dimension {dim}")
        ids: list[str] = []
        rows = np.empty((count, dim), dtype=np.float32)
        for i in range(count):
            (id_len,) = struct.unpack("<H", _read_exact(fh, 2, f"id length of entry {i}"))
            image_id = _read_exact(fh, id_len, f"id of entry {i}").decode("utf-8")
            raw = _read_exact(fh, dim * 4, f"vector of entry {i}")
            vec = np.frombuffer(raw, dtype="<f4").astype(np.float32)
            if vec.size != dim:
                raise DimensionMismatchError(f"{path}: entry {image_id!r} has {vec.size} components, expected {dim}")
            if not np.all(np.isfinite(vec)):
                raise NonFiniteVectorError(f"{path}: entry {image_id!r} has non-finite components")
            norm = float(np.linalg.norm(vec.astype(np.float64)))
            if norm == 0.0:
                raise NonFiniteVectorError(f"{path}: entry {image_id!r} is a zero vector")
            if abs(norm - 1.0) > _NORM_TOLERANCE:
                vec = (vec.astype(np.float64) / norm).astype(np.float32)
            ids.append(image_id)
            rows[i] = vec
        trailing = fh.read(1)
        if trailing:
            raise IndexFormatError(f"{path}: trailing bytes after {count} entries")
    return EmbeddingIndex(dim=dim, ids=tuple(ids), matrix=rows, metadata=dict(attributions or {}))


def retrieve(index: EmbeddingIndex, query_vector: np.ndarray, k: int) -> RetrievalResult:
    """Exact top-k by dot product against unit-norm rows.

    Ties are broken by ascending image id; k beyond the index size returns
    everything.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k!r}")
    query = np.asarray(query_vector, dtype=np.float64)
    if query.shape != (index.dim,):
        raise DimensionMismatchError(f"query has shape {query.shape}, index dimension is {index.dim}")
    norm = float(np.linalg.norm(query))
    if norm == 0.0 or not np.isfinite(norm):
        raise ValueError("query vector must be finite and nonzero")
    query = query / norm

    n = len(index)
    if n == 0:
        return RetrievalResult(())

    if k >= n:
        chosen = np.arange(n)
    else:
        # Cheap float32 pass to shortlist candidates.  The float32 dot error
        # for unit vectors is bounded well below the 1e-3 margin, so the true
        # float64 top-k always survives the cut; the shortlist is then
        # rescored exactly.
        rough = index.matrix @ query.astype(np.float32)
        top = np.argpartition(-rough, k - 1)[:k]
        cutoff = rough[top].min() - 1e-3
        chosen = np.flatnonzero(rough >= cutoff)
    exact = index.matrix[chosen].astype(np.float64) @ query
    scores = {int(i): float(s) for i, s in zip(chosen, exact)}
    ordered = sorted(scores, key=lambda i: (-scores[i], index.ids[i]))[:k]
    return RetrievalResult(tuple((index.ids[i], scores[i]) for i in ordered))


def embed_query(text: str, provider, dim: int | None = None) -> np.ndarray:
    """Embed a retrieval query through a provider and unit-normalize it."""
    vector = np.asarray(provider.embed([text])[0], dtype=np.float64)
    if dim is not None and vector.size != dim:
        raise DimensionMismatchError(f"provider embeds into {vector.size} dimensions, index expects {dim}")
    norm = float(np.linalg.norm(vector))
    if norm == 0.0 or not np.isfinite(norm):
        raise ValueError("provider returned a zero or non-finite embedding")
    return vector / norm

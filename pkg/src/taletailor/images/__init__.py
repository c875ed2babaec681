"""Embedding index, exact cosine retrieval, and visual-consistency ranking."""

from taletailor.images.index import (
    DimensionMismatchError,
    EmbeddingIndex,
    IndexFormatError,
    NonFiniteVectorError,
    RetrievalResult,
    TruncatedIndexError,
    embed_query,
    load_index,
    retrieve,
    write_index,
)
from taletailor.images.consistency import (
    ClassDistribution,
    consistency,
    load_class_distributions,
    rank_stories_by_consistency,
)

__all__ = [
    "DimensionMismatchError",
    "EmbeddingIndex",
    "IndexFormatError",
    "NonFiniteVectorError",
    "RetrievalResult",
    "TruncatedIndexError",
    "embed_query",
    "load_index",
    "retrieve",
    "write_index",
    "ClassDistribution",
    "consistency",
    "load_class_distributions",
    "rank_stories_by_consistency",
]

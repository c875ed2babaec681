"""taletailor: a human-in-the-loop story co-writing engine.

Subpackages:
    metrics     -- per-text scoring functions and min-max normalization
    generation  -- built-in n-gram generator, samplers, provider protocol
    rerank      -- candidate ranking and the keep-top-half refinement loop
    images      -- embedding index, cosine retrieval, visual consistency
    corpus      -- ingestion, cleaning, prompts, frequency sets, statistics
    service     -- HTTP co-writing service with persistence and analytics
"""

__version__ = "0.1.0"

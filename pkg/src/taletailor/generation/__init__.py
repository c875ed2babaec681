"""Candidate-text generation: built-in n-gram model, samplers, provider protocol."""

from taletailor.generation.rng import SplitMix64, mix_seed
from taletailor.generation.sampling import nucleus_sample, top_k_sample
from taletailor.generation.ngram import EOS_TOKEN, NGramModel, sentence_token_stream, train_ngram
from taletailor.generation.provider import (
    CompletionRequest,
    CompletionResponse,
    GeneratorConfig,
    NGramProvider,
    ProviderError,
    TransportError,
)
from taletailor.generation.embedding import HashEmbedder

__all__ = [
    "SplitMix64",
    "mix_seed",
    "nucleus_sample",
    "top_k_sample",
    "EOS_TOKEN",
    "NGramModel",
    "sentence_token_stream",
    "train_ngram",
    "CompletionRequest",
    "CompletionResponse",
    "GeneratorConfig",
    "NGramProvider",
    "ProviderError",
    "TransportError",
    "HashEmbedder",
]

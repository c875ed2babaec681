"""The text-provider contract and its built-in n-gram implementation.

A provider answers three questions: complete this context (``complete``),
what would you predict next at every position of these tokens (``logits``),
and embed these texts (``embed``).  Remote neural providers speak the same
contract over HTTP (see ``remote`` and ``server``).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Protocol, runtime_checkable

import numpy as np

from taletailor.generation.embedding import HashEmbedder
from taletailor.generation.ngram import EOS_TOKEN, NGramModel
from taletailor.generation.rng import SplitMix64, mix_seed
from taletailor.generation.sampling import nucleus_sample, top_k_sample
from taletailor.metrics.distributions import TokenDistribution

MODES = ("nucleus", "top_k")

DEFAULT_NUCLEUS_P = 0.9
DEFAULT_TOP_K = 50
DEFAULT_MAX_TOKENS = 40


class ProviderError(Exception):
    """Generation/scoring failed on the provider side."""


class TransportError(ProviderError):
    """The remote provider could not be reached at all."""


@dataclass(frozen=True)
class GeneratorConfig:
    mode: str = "nucleus"
    p: float = DEFAULT_NUCLEUS_P
    k: int = DEFAULT_TOP_K
    max_tokens: int = DEFAULT_MAX_TOKENS
    seed: int = 0

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "nucleus" and not (0.0 < self.p <= 1.0):
            raise ValueError(f"nucleus threshold must lie in (0, 1], got {self.p!r}")
        if self.mode == "top_k" and self.k < 1:
            raise ValueError(f"top-k cutoff must be at least 1, got {self.k!r}")
        if self.max_tokens < 1:
            raise ValueError(f"max_tokens must be at least 1, got {self.max_tokens!r}")

    def with_seed(self, seed: int) -> "GeneratorConfig":
        return replace(self, seed=seed)


@dataclass(frozen=True)
class CompletionRequest:
    context: str
    config: GeneratorConfig = field(default_factory=GeneratorConfig)
    n_candidates: int = 3

    def __post_init__(self) -> None:
        if self.n_candidates < 1:
            raise ValueError("n_candidates must be at least 1")


@dataclass(frozen=True)
class CompletionResponse:
    candidates: tuple[str, ...]


@runtime_checkable
class TextProvider(Protocol):
    def complete(self, request: CompletionRequest) -> CompletionResponse: ...

    def logits(self, tokens: list[str]) -> list[TokenDistribution]: ...

    def embed(self, texts: list[str]) -> list[np.ndarray]: ...


def _sample_token(model: NGramModel, context: list[str], config: GeneratorConfig, rng: SplitMix64) -> str:
    window = context[-(model.order - 1) :] if model.order > 1 else []
    dist = model.distribution(window)
    if config.mode == "nucleus":
        token_id = nucleus_sample(dist, config.p, rng)
    else:
        token_id = top_k_sample(dist, config.k, rng)
    return model.vocabulary[token_id]


def generate_candidate(model: NGramModel, context_tokens: list[str], config: GeneratorConfig, rng: SplitMix64) -> str:
    """Token-by-token generation, stopping at the EOS sentinel or max_tokens."""
    context = list(context_tokens)
    out: list[str] = []
    for _ in range(config.max_tokens):
        token = _sample_token(model, context, config, rng)
        if token == EOS_TOKEN:
            break
        out.append(token)
        context.append(token)
    return " ".join(out)


class NGramProvider:
    """In-process provider backed by a trained back-off model.

    Each candidate of a request draws from an independent PRNG stream derived
    from (seed, candidate index), so responses are reproducible and candidates
    within a request are decorrelated.
    """

    def __init__(self, model: NGramModel, embedder: HashEmbedder | None = None):
        self.model = model
        self.embedder = embedder or HashEmbedder()

    def complete(self, request: CompletionRequest) -> CompletionResponse:
        context_tokens = [t for t in request.context.split() if t != EOS_TOKEN]
        candidates = []
        for index in range(request.n_candidates):
            rng = SplitMix64.for_stream(request.config.seed, index)
            candidates.append(generate_candidate(self.model, context_tokens, request.config, rng))
        return CompletionResponse(tuple(candidates))

    def logits(self, tokens: list[str]) -> list[TokenDistribution]:
        return self.model.logits(tokens)

    def embed(self, texts: list[str]) -> list[np.ndarray]:
        return [self.embedder.embed_one(t) for t in texts]


def candidate_seed(base_seed: int, *stream: int) -> int:
    """Stable derived seed for a generation slot (round, position, ...)."""
    return mix_seed(base_seed, *stream)

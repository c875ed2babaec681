"""Candidate ranking and the sentence-by-sentence keep-top-half loop.

Ranking scales each raw feature to [0, 1] across the batch (a constant
feature becomes a neutral 0.5) and sums the scaled features with equal
weights by default.  The refinement loop grows every candidate by one
sentence, re-ranks, keeps the better half, and branches each survivor in two
to restore the population.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from collections.abc import Sequence

from taletailor.generation.provider import (
    CompletionRequest,
    GeneratorConfig,
    ProviderError,
    TextProvider,
    candidate_seed,
)
from taletailor.metrics.context import MetricVector, ScoringContext, score_text
from taletailor.metrics.normalize import min_max_normalize

DEFAULT_WEIGHTS = (1.0,) * 6


@dataclass(frozen=True)
class Candidate:
    """A candidate text with its raw feature scores and batch-scaled total."""

    text: str
    raw_metrics: MetricVector | None = None
    normalized_score: float = 0.0
    lineage: tuple[int, ...] = ()
    degraded: bool = False


@dataclass(frozen=True)
class RerankConfig:
    population: int = 8
    rounds: int = 1
    hq_generate: int = 10
    hq_return: int = 3
    weights: tuple[float, ...] = DEFAULT_WEIGHTS
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)

    def __post_init__(self) -> None:
        if self.population < 2 or self.population % 2 != 0:
            raise ValueError("population must be an even integer >= 2")
        if self.rounds < 0:
            raise ValueError("rounds must be >= 0")
        if self.hq_return > self.hq_generate:
            raise ValueError("hq_return cannot exceed hq_generate")
        if len(self.weights) != 6:
            raise ValueError("weights must cover all six features")


def normalize_and_rank(
    rows: Sequence[Sequence[float]], weights: Sequence[float] = DEFAULT_WEIGHTS
) -> tuple[list[float], list[int]]:
    """Scale each feature column across the batch, sum, and argsort descending.

    Returns (totals, order); ties keep the original candidate order.  Because
    min-max scaling is invariant to positive affine maps of a column, so is
    the returned order.
    """
    if not rows:
        raise ValueError("cannot rank an empty batch")
    n_features = len(rows[0])
    columns = [min_max_normalize([row[j] for row in rows]) for j in range(n_features)]
    totals = [sum(w * columns[j][i] for j, w in enumerate(weights)) for i in range(len(rows))]
    order = sorted(range(len(rows)), key=lambda i: (-totals[i], i))
    return totals, order


def rank_candidates(
    candidates: Sequence[Candidate],
    ctx: ScoringContext,
    *,
    prefix: str = "",
    weights: Sequence[float] = DEFAULT_WEIGHTS,
) -> list[Candidate]:
    """Score and sort candidates, best first.

    ``prefix`` is prepended (with a space) before scoring so continuations can
    be judged in the context of the story written so far.
    """
    if not candidates:
        raise ValueError("cannot rank an empty candidate list")
    scored = []
    for cand in candidates:
        full_text = f"{prefix} {cand.text}".strip() if prefix else cand.text
        scored.append(score_text(full_text, ctx))
    totals, order = normalize_and_rank([v.as_tuple() for v in scored], weights)
    return [
        replace(candidates[i], raw_metrics=scored[i], normalized_score=totals[i])
        for i in order
    ]


def rank(
    texts: Sequence[str],
    ctx: ScoringContext,
    *,
    prefix: str = "",
    weights: Sequence[float] = DEFAULT_WEIGHTS,
) -> list[Candidate]:
    """Rank bare candidate texts, best first."""
    return rank_candidates([Candidate(text=t) for t in texts], ctx, prefix=prefix, weights=weights)


def extend_candidates(
    candidates: Sequence[Candidate],
    provider: TextProvider,
    config: RerankConfig,
    round_index: int,
) -> list[Candidate]:
    """Grow each candidate by one sentence.

    The generation seed is derived from (base seed, round, slot), so branch
    copies sitting in different slots diverge on their next extension while
    the whole loop stays reproducible.
    """
    extended = []
    for slot, cand in enumerate(candidates):
        seed = candidate_seed(config.generator.seed, round_index, slot)
        request = CompletionRequest(context=cand.text, config=config.generator.with_seed(seed), n_candidates=1)
        completion = provider.complete(request).candidates[0]
        new_text = f"{cand.text} {completion}".strip() if completion else cand.text
        extended.append(replace(cand, text=new_text))
    return extended


def rerank_step(
    candidates: Sequence[Candidate],
    provider: TextProvider,
    ctx: ScoringContext,
    config: RerankConfig,
    *,
    round_index: int = 0,
) -> list[Candidate]:
    """One refinement round: extend, rank, keep the top half, branch survivors.

    On provider failure the incoming population is returned unchanged except
    for a ``degraded`` flag, so callers can distinguish a stalled round from
    a completed one.
    """
    population = len(candidates)
    if population < 2 or population % 2 != 0:
        raise ValueError("population must be an even integer >= 2")
    try:
        extended = extend_candidates(candidates, provider, config, round_index)
    except ProviderError:
        return [replace(c, degraded=True) for c in candidates]
    ranked = rank_candidates(extended, ctx, weights=config.weights)
    survivors = ranked[: population // 2]
    branched: list[Candidate] = []
    for survivor in survivors:
        branch = replace(survivor, lineage=survivor.lineage + (round_index,))
        branched.append(branch)
        branched.append(branch)
    return branched


@dataclass
class RoundTrace:
    extended: list[Candidate]
    ranked: list[Candidate]
    survivors: list[Candidate]


def rerank(
    seeds: Sequence[str] | Sequence[Candidate],
    provider: TextProvider,
    ctx: ScoringContext,
    config: RerankConfig | None = None,
    *,
    trace: list[RoundTrace] | None = None,
) -> list[Candidate]:
    """Run ``config.rounds`` refinement rounds over an initial population.

    Seed texts are repeated cyclically up to the configured population size.
    Passing a list as ``trace`` records every round's extended, ranked and
    surviving candidates (used by diagnostics and the oracle tests).
    """
    config = config or RerankConfig()
    pool = [s if isinstance(s, Candidate) else Candidate(text=s) for s in seeds]
    if not pool:
        raise ValueError("need at least one seed candidate")
    population = [pool[i % len(pool)] for i in range(config.population)]
    for round_index in range(config.rounds):
        if trace is not None:
            extended = extend_candidates(population, provider, config, round_index)
            ranked = rank_candidates(extended, ctx, weights=config.weights)
            trace.append(RoundTrace(extended=extended, ranked=ranked, survivors=ranked[: config.population // 2]))
        population = rerank_step(population, provider, ctx, config, round_index=round_index)
        if any(c.degraded for c in population):
            break
    return population


def autocomplete_fast(
    context: str,
    provider: TextProvider,
    *,
    generator: GeneratorConfig | None = None,
) -> tuple[str, str, str]:
    """Three immediate, unranked completions; may include empty or weak text."""
    request = CompletionRequest(context=context, config=generator or GeneratorConfig(), n_candidates=3)
    response = provider.complete(request)
    return (response.candidates[0], response.candidates[1], response.candidates[2])


def autocomplete_hq(
    context: str,
    provider: TextProvider,
    ctx: ScoringContext,
    config: RerankConfig | None = None,
) -> list[Candidate]:
    """Generate a wide batch, rank it in story context, return the best few."""
    config = config or RerankConfig()
    request = CompletionRequest(context=context, config=config.generator, n_candidates=config.hq_generate)
    response = provider.complete(request)
    ranked = rank(list(response.candidates), ctx, prefix=context, weights=config.weights)
    return ranked[: config.hq_return]

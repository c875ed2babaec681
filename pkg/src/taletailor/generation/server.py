"""HTTP server exposing the provider wire protocol over the built-in models.

Endpoints (JSON bodies, plain numbers for all vectors):

    POST /v1/complete {context, n, mode, p, k, max_tokens, seed} -> {candidates}
    POST /v1/logits   {tokens, model?}                           -> {distributions, vocabulary}
    POST /v1/embed    {texts}                                    -> {vectors, dim}

``model`` selects between a server's registered models ("preset" /
"finetuned") when it hosts a pair; it is optional and defaults to the
server's primary model.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from taletailor.generation.embedding import HashEmbedder
from taletailor.generation.ngram import NGramModel
from taletailor.generation.provider import CompletionRequest, GeneratorConfig, NGramProvider


class CompleteBody(BaseModel):
    context: str = ""
    n: int = 3
    mode: str = "nucleus"
    p: float = 0.9
    k: int = 50
    max_tokens: int = Field(default=40, ge=1)
    seed: int = 0


class LogitsBody(BaseModel):
    tokens: list[str]
    model: str | None = None


class EmbedBody(BaseModel):
    texts: list[str]


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def create_provider_app(
    models: dict[str, NGramModel],
    embedder: HashEmbedder | None = None,
    default_model: str | None = None,
) -> FastAPI:
    if not models:
        raise ValueError("at least one model is required")
    primary = default_model or ("finetuned" if "finetuned" in models else next(iter(models)))
    if primary not in models:
        raise ValueError(f"default model {primary!r} is not registered")
    embedder = embedder or HashEmbedder()
    providers = {name: NGramProvider(model, embedder) for name, model in models.items()}

    app = FastAPI(title="taletailor provider", docs_url=None, redoc_url=None)

    @app.post("/v1/complete")
    def complete(body: CompleteBody):
        try:
            config = GeneratorConfig(mode=body.mode, p=body.p, k=body.k, max_tokens=body.max_tokens, seed=body.seed)
            request = CompletionRequest(context=body.context, config=config, n_candidates=body.n)
        except ValueError as exc:
            return _error(400, "invalid_request", str(exc))
        response = providers[primary].complete(request)
        return {"candidates": list(response.candidates)}

    @app.post("/v1/logits")
    def logits(body: LogitsBody):
        name = body.model or primary
        if name not in providers:
            return _error(404, "unknown_model", f"no model named {name!r}")
        if not body.tokens:
            return _error(400, "invalid_request", "tokens must be nonempty")
        dists = providers[name].logits(body.tokens)
        return {
            "distributions": [d.probabilities.tolist() for d in dists],
            "vocabulary": list(dists[0].vocabulary or ()),
        }

    @app.post("/v1/embed")
    def embed(body: EmbedBody):
        if not body.texts:
            return _error(400, "invalid_request", "texts must be nonempty")
        vectors = providers[primary].embed(body.texts)
        dims = {v.size for v in vectors}
        if len(dims) != 1:
            return _error(500, "inconsistent_batch", "embedding batch produced mixed dimensions")
        return {"vectors": [v.tolist() for v in vectors], "dim": vectors[0].size}

    return app

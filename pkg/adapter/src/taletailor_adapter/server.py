"""FastAPI app implementing the provider wire protocol over the model pair."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from taletailor_adapter.config import AdapterConfig, resolve_encoder, resolve_model


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


def create_adapter_app(config: AdapterConfig | None = None) -> FastAPI:
    config = config or AdapterConfig()
    models = {
        "preset": resolve_model(config.preset_model),
        "finetuned": resolve_model(config.finetuned_model),
    }
    encoder = resolve_encoder(config.encoder)

    app = FastAPI(title="taletailor model adapter", docs_url=None, redoc_url=None)

    @app.post("/v1/complete")
    def complete(body: CompleteBody):
        if body.mode not in ("nucleus", "top_k"):
            return _error(400, "invalid_request", f"unknown sampling mode {body.mode!r}")
        if body.mode == "nucleus" and not (0.0 < body.p <= 1.0):
            return _error(400, "invalid_request", "p must lie in (0, 1]")
        if body.mode == "top_k" and body.k < 1:
            return _error(400, "invalid_request", "k must be >= 1")
        if body.n < 1:
            return _error(400, "invalid_request", "n must be >= 1")
        if body.n > config.max_batch:
            return _error(400, "batch_too_large", f"n exceeds max batch size {config.max_batch}")
        candidates = models["finetuned"].complete(
            body.context, body.n, body.mode, body.p, body.k, body.max_tokens, body.seed
        )
        return {"candidates": candidates}

    @app.post("/v1/logits")
    def logits(body: LogitsBody):
        name = body.model or "finetuned"
        model = models.get(name)
        if model is None:
            return _error(404, "unknown_model", f"no model named {name!r}")
        if not body.tokens:
            return _error(400, "invalid_request", "tokens must be nonempty")
        if len(body.tokens) > config.max_batch:
            return _error(400, "batch_too_large", f"token count exceeds max batch size {config.max_batch}")
        dists = model.logits(body.tokens)
        return {
            "distributions": [d.tolist() for d in dists],
            "vocabulary": list(model.vocabulary),
        }

    @app.post("/v1/embed")
    def embed(body: EmbedBody):
        if not body.texts:
            return _error(400, "invalid_request", "texts must be nonempty")
        if len(body.texts) > config.max_batch:
            return _error(400, "batch_too_large", f"batch exceeds max batch size {config.max_batch}")
        vectors = encoder.embed_texts(body.texts)
        dims = {v.size for v in vectors}
        if len(dims) != 1:
            return _error(500, "inconsistent_batch", "embedding batch produced mixed dimensions")
        return {"vectors": [v.tolist() for v in vectors], "dim": encoder.dim}

    return app

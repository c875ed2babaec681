"""The co-writing HTTP service.

Wires a text provider (built-in n-gram pair by default, remote over the wire
protocol otherwise), the scoring context, and an optional image index into
the story/session endpoints.  All errors use a structured
``{code, message, field?}`` body with stable string codes.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from taletailor.corpus.frequent import build_frequent_words
from taletailor.corpus.ingest import read_extracts_jsonl
from taletailor.generation.embedding import HashEmbedder
from taletailor.generation.ngram import EOS_TOKEN, sentence_token_stream, train_ngram
from taletailor.generation.provider import GeneratorConfig, NGramProvider, ProviderError, TextProvider
from taletailor.generation.remote import RemoteProvider
from taletailor.images.index import EmbeddingIndex, embed_query, load_index, retrieve
from taletailor.metrics.context import FEATURE_NAMES, LogitPair, ScoringContext
from taletailor.metrics.lexicon import SentimentLexicon
from taletailor.rerank import RerankConfig, autocomplete_fast, autocomplete_hq
from taletailor.service.html import render_snapshot
from taletailor.service.models import (
    IMAGE,
    MACHINE,
    TEXT,
    Block,
    FeedbackRecord,
    FeedbackValidationError,
    compute_analytics,
)
from taletailor.service.store import (
    StoryNotFoundError,
    StoryPublishedError,
    StoryStore,
    VersionConflictError,
)


@dataclass
class ServiceSettings:
    corpus_path: str | Path | None = None
    index_path: str | Path | None = None
    attribution_path: str | Path | None = None
    lexicon_path: str | Path | None = None
    provider_url: str | None = None
    remote_logit_pair: bool = False
    data_dir: str | Path | None = None
    ui_dir: str | Path | None = None
    ngram_order: int = 3
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)
    rerank: RerankConfig | None = None


class _ServiceError(Exception):
    def __init__(self, status: int, code: str, message: str, fieldname: str | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.fieldname = fieldname


class CreateStoryBody(BaseModel):
    title: str = ""


class UpdateBlocksBody(BaseModel):
    version: int
    blocks: list[dict[str, Any]]


class AutocompleteBody(BaseModel):
    mode: str = "fast"
    cursor_block: int | None = None


class SuggestImagesBody(BaseModel):
    query: str
    k: int = 3
    theme: str = ""


class AcceptBody(BaseModel):
    ref: str


class PublishBody(BaseModel):
    feedback: dict[str, Any]


def _load_attributions(path: str | Path | None) -> dict[str, str]:
    if not path:
        return {}
    table = {}
    for line in Path(path).read_text("utf-8").splitlines():
        if not line.strip() or "\t" not in line:
            continue
        image_id, attribution = line.split("\t", 1)
        table[image_id] = attribution
    return table


def build_components(
    settings: ServiceSettings,
) -> tuple[TextProvider, ScoringContext, EmbeddingIndex | None]:
    """Assemble provider, scoring context and index from settings."""
    index = None
    if settings.index_path:
        index = load_index(settings.index_path, _load_attributions(settings.attribution_path))

    corpus_texts: list[str] = []
    if settings.corpus_path:
        corpus_texts = [e.body for e in read_extracts_jsonl(settings.corpus_path)]

    lexicon = SentimentLexicon.load(settings.lexicon_path) if settings.lexicon_path else SentimentLexicon.empty()

    provider: TextProvider
    logit_pair: LogitPair | None = None
    if settings.provider_url:
        provider = RemoteProvider(settings.provider_url)
        if settings.remote_logit_pair:
            logit_pair = LogitPair(
                RemoteProvider(settings.provider_url, model="preset"),
                RemoteProvider(settings.provider_url, model="finetuned"),
            )
    else:
        if not corpus_texts:
            raise ValueError("a corpus path is required when no remote provider is configured")
        streams = [sentence_token_stream(text) for text in corpus_texts]
        streams = [s for s in streams if s]
        finetuned = train_ngram(streams, settings.ngram_order)
        # A unigram model over the same corpus plays the generic twin, so the
        # fine-tuned-drift feature is live even fully offline.
        preset = train_ngram(streams, 1)
        embedder = HashEmbedder(dim=index.dim if index else HashEmbedder().dim)
        provider = NGramProvider(finetuned, embedder)
        logit_pair = LogitPair(NGramProvider(preset, embedder), provider)

    frequent = None
    if corpus_texts:
        frequent = build_frequent_words(corpus_texts)
    ctx = ScoringContext.build(lexicon=lexicon, frequent_words=frequent, logit_pair=logit_pair)
    return provider, ctx, index


def create_app(
    settings: ServiceSettings | None = None,
    *,
    provider: TextProvider | None = None,
    scoring_context: ScoringContext | None = None,
    index: EmbeddingIndex | None = None,
    store: StoryStore | None = None,
) -> FastAPI:
    """Build the service app; prebuilt components override settings wiring."""
    settings = settings or ServiceSettings()
    if provider is None or scoring_context is None:
        built_provider, built_ctx, built_index = build_components(settings)
        provider = provider or built_provider
        scoring_context = scoring_context or built_ctx
        index = index if index is not None else built_index
    store = store or StoryStore(settings.data_dir)
    rerank_config = settings.rerank or RerankConfig(generator=settings.generator)

    # Pending suggestions per story; refs are single-use and server-issued so
    # machine provenance can never be fabricated by a client.
    pending: dict[str, dict[str, dict[str, Any]]] = {}

    app = FastAPI(title="taletailor service", docs_url=None, redoc_url=None)
    app.state.store = store
    app.state.provider = provider
    app.state.scoring_context = scoring_context
    app.state.index = index

    @app.exception_handler(_ServiceError)
    def service_error(_request: Request, exc: _ServiceError):
        body: dict[str, Any] = {"code": exc.code, "message": exc.message}
        if exc.fieldname:
            body["field"] = exc.fieldname
        headers = {"Retry-After": "1"} if exc.status == 503 else None
        return JSONResponse(status_code=exc.status, content=body, headers=headers)

    def _get_story(story_id: str):
        try:
            return store.get(story_id)
        except StoryNotFoundError:
            raise _ServiceError(404, "story_not_found", f"no story {story_id!r}")

    @app.post("/stories")
    def create_story(body: CreateStoryBody):
        return store.create(body.title).to_dict()

    @app.get("/stories/{story_id}")
    def get_story(story_id: str):
        return _get_story(story_id).to_dict()

    @app.patch("/stories/{story_id}/blocks")
    def update_blocks(story_id: str, body: UpdateBlocksBody):
        _get_story(story_id)
        try:
            return store.update_blocks(story_id, body.version, body.blocks).to_dict()
        except VersionConflictError as exc:
            raise _ServiceError(409, "version_conflict", str(exc))
        except StoryPublishedError as exc:
            raise _ServiceError(409, "story_published", str(exc))
        except ValueError as exc:
            raise _ServiceError(422, "invalid_blocks", str(exc))

    @app.post("/stories/{story_id}/autocomplete")
    def autocomplete(story_id: str, body: AutocompleteBody):
        document = _get_story(story_id)
        if body.mode not in ("fast", "hq"):
            raise _ServiceError(422, "invalid_mode", "mode must be 'fast' or 'hq'", "mode")
        text_blocks = [b for b in document.blocks if b.kind == TEXT]
        if body.cursor_block is not None:
            text_blocks = text_blocks[: body.cursor_block]
        context = " ".join(b.content for b in text_blocks)
        try:
            if body.mode == "fast":
                texts = list(autocomplete_fast(context, provider, generator=rerank_config.generator))
                suggestions = [{"text": t, "scores": None} for t in texts]
            else:
                ranked = autocomplete_hq(context, provider, scoring_context, rerank_config)
                suggestions = []
                for cand in ranked:
                    scores = dict(zip(FEATURE_NAMES, cand.raw_metrics.as_tuple()))
                    scores["total"] = cand.normalized_score
                    scores["partial"] = cand.raw_metrics.partial
                    suggestions.append({"text": cand.text, "scores": scores})
        except ProviderError as exc:
            raise _ServiceError(503, "provider_unavailable", f"{exc}; retry shortly")
        issued = []
        bucket = pending.setdefault(story_id, {})
        for suggestion in suggestions:
            ref = f"text-{uuid.uuid4().hex[:10]}"
            bucket[ref] = {"type": TEXT, "text": suggestion["text"]}
            issued.append({"ref": ref, **suggestion})
        return {"mode": body.mode, "suggestions": issued}

    @app.post("/stories/{story_id}/images/suggest")
    def suggest_images(story_id: str, body: SuggestImagesBody):
        _get_story(story_id)
        if body.k < 1:
            raise _ServiceError(422, "invalid_k", "k must be at least 1", "k")
        if index is None or len(index) == 0:
            return {"results": [], "warning": "index_empty"}
        try:
            query_vector = embed_query(body.query, provider, dim=index.dim)
        except ProviderError as exc:
            raise _ServiceError(503, "provider_unavailable", f"{exc}; retry shortly")
        result = retrieve(index, query_vector, body.k)
        bucket = pending.setdefault(story_id, {})
        results = []
        for image_id, score in result.results:
            ref = f"image-{uuid.uuid4().hex[:10]}"
            bucket[ref] = {"type": IMAGE, "image_id": image_id, "query": body.query, "theme": body.theme}
            results.append(
                {
                    "ref": ref,
                    "image_id": image_id,
                    "score": score,
                    "attribution": index.attribution(image_id),
                }
            )
        return {"results": results}

    @app.post("/stories/{story_id}/accept")
    def accept(story_id: str, body: AcceptBody):
        _get_story(story_id)
        bucket = pending.get(story_id, {})
        suggestion = bucket.pop(body.ref, None)
        if suggestion is None:
            raise _ServiceError(404, "unknown_suggestion", f"no pending suggestion {body.ref!r}", "ref")
        if suggestion["type"] == TEXT:
            if not suggestion["text"]:
                raise _ServiceError(422, "empty_suggestion", "cannot accept an empty completion", "ref")
            block = Block(
                block_id=store.new_block_id(),
                kind=TEXT,
                content=suggestion["text"],
                provenance=MACHINE,
            )
        else:
            block = Block(
                block_id=store.new_block_id(),
                kind=IMAGE,
                image_id=suggestion["image_id"],
                query=suggestion["query"],
                theme=suggestion["theme"],
            )
        try:
            return store.append_block(story_id, block).to_dict()
        except StoryPublishedError as exc:
            raise _ServiceError(409, "story_published", str(exc))

    @app.post("/stories/{story_id}/publish")
    def publish(story_id: str, body: PublishBody):
        document = _get_story(story_id)
        try:
            feedback = FeedbackRecord.validate(body.feedback)
        except FeedbackValidationError as exc:
            first = (exc.missing + exc.invalid)[0] if (exc.missing or exc.invalid) else None
            raise _ServiceError(422, "feedback_incomplete", str(exc), first)
        html = render_snapshot(document)
        try:
            token = store.publish(story_id, feedback, html)
        except StoryPublishedError as exc:
            raise _ServiceError(409, "story_published", str(exc))
        except ValueError as exc:
            raise _ServiceError(422, "empty_story", str(exc))
        pending.pop(story_id, None)
        return {"share_url": f"/share/{token}", "token": token}

    @app.get("/stories/{story_id}/analytics")
    def analytics(story_id: str):
        return compute_analytics(_get_story(story_id)).to_dict()

    @app.get("/share/{token}")
    def share(token: str):
        try:
            return HTMLResponse(store.share_html(token))
        except StoryNotFoundError:
            raise _ServiceError(404, "share_not_found", f"no shared story for token {token!r}")

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "eos_token": EOS_TOKEN}

    if settings.ui_dir:
        app.mount("/", StaticFiles(directory=str(settings.ui_dir), html=True), name="ui")

    return app

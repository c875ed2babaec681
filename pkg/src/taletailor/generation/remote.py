"""HTTP client for providers speaking the wire protocol."""

from __future__ import annotations

import httpx
import numpy as np

from taletailor.generation.provider import (
    CompletionRequest,
    CompletionResponse,
    ProviderError,
    TransportError,
)
from taletailor.metrics.distributions import TokenDistribution


class RemoteProvider:
    """Client side of the provider protocol.

    ``model`` pins /v1/logits to one of the remote's registered models, which
    lets a single endpoint hosting a preset/finetuned pair back both halves
    of a logit pair.  Transport failures raise TransportError; protocol-level
    failures (4xx/5xx) raise ProviderError.
    """

    def __init__(
        self,
        base_url: str,
        *,
        model: str | None = None,
        client: httpx.Client | None = None,
        timeout: float = 30.0,
    ):
        self.base_url = base_url.rstrip("/")
        self.model = model
        self._client = client or httpx.Client(timeout=timeout)

    def close(self) -> None:
        self._client.close()

    def _post(self, path: str, payload: dict) -> dict:
        try:
            response = self._client.post(self.base_url + path, json=payload)
        except httpx.HTTPError as exc:
            raise TransportError(f"provider unreachable at {self.base_url}: {exc}") from exc
        if response.status_code >= 400:
            try:
                body = response.json()
                message = body.get("message") or body.get("detail") or response.text
            except ValueError:
                message = response.text
            raise ProviderError(f"provider error {response.status_code}: {message}")
        return response.json()

    def complete(self, request: CompletionRequest) -> CompletionResponse:
        cfg = request.config
        body = self._post(
            "/v1/complete",
            {
                "context": request.context,
                "n": request.n_candidates,
                "mode": cfg.mode,
                "p": cfg.p,
                "k": cfg.k,
                "max_tokens": cfg.max_tokens,
                "seed": cfg.seed,
            },
        )
        candidates = body.get("candidates")
        if not isinstance(candidates, list) or len(candidates) != request.n_candidates:
            raise ProviderError("provider returned a malformed candidate list")
        return CompletionResponse(tuple(str(c) for c in candidates))

    def logits(self, tokens: list[str]) -> list[TokenDistribution]:
        payload: dict = {"tokens": tokens}
        if self.model is not None:
            payload["model"] = self.model
        body = self._post("/v1/logits", payload)
        vocabulary = tuple(body.get("vocabulary") or ())
        rows = body.get("distributions")
        if not isinstance(rows, list) or len(rows) != len(tokens):
            raise ProviderError("provider returned a malformed distribution list")
        try:
            return [TokenDistribution(row, vocabulary or None) for row in rows]
        except ValueError as exc:
            raise ProviderError(f"provider returned invalid distributions: {exc}") from exc

    def embed(self, texts: list[str]) -> list[np.ndarray]:
        body = self._post("/v1/embed", {"texts": texts})
        vectors = body.get("vectors")
        if not isinstance(vectors, list) or len(vectors) != len(texts):
            raise ProviderError("provider returned a malformed vector list")
        arrays = [np.asarray(v, dtype=np.float64) for v in vectors]
        dims = {a.size for a in arrays}
        if len(dims) > 1:
            raise ProviderError("provider returned a dimension-inconsistent batch")
        declared = body.get("dim")
        if declared is not None and arrays and arrays[0].size != declared:
            raise ProviderError("provider's declared dim does not match its vectors")
        return arrays

"""Reusable conformance checks for provider-protocol servers.

Any server claiming to speak the wire protocol (the built-in n-gram server,
an external neural adapter, ...) should pass ``run_conformance`` unmodified.
Checks are written against an ``httpx.Client`` so they run equally over a
real socket or an in-process ASGI transport.
"""

from __future__ import annotations

import math

import httpx

SUM_TOLERANCE = 1e-6


def check_complete_contract(client: httpx.Client) -> None:
    payload = {"context": "once upon a time", "n": 3, "mode": "nucleus", "p": 0.9, "max_tokens": 8, "seed": 7}
    first = client.post("/v1/complete", json=payload)
    assert first.status_code == 200, f"/v1/complete failed: {first.status_code} {first.text}"
    candidates = first.json()["candidates"]
    assert isinstance(candidates, list) and len(candidates) == 3
    assert all(isinstance(c, str) for c in candidates)

    second = client.post("/v1/complete", json=payload)
    assert second.json()["candidates"] == candidates, "fixed seed must reproduce identical candidates"

    other_seed = client.post("/v1/complete", json=dict(payload, seed=8))
    assert other_seed.status_code == 200


def check_complete_rejects_bad_mode(client: httpx.Client) -> None:
    response = client.post("/v1/complete", json={"context": "x", "n": 1, "mode": "argmax"})
    assert 400 <= response.status_code < 500, "unknown sampling mode must be rejected"


def check_logits_contract(client: httpx.Client, model: str | None = None) -> None:
    payload: dict = {"tokens": ["once", "upon", "a", "time"]}
    if model is not None:
        payload["model"] = model
    response = client.post("/v1/logits", json=payload)
    assert response.status_code == 200, f"/v1/logits failed: {response.status_code} {response.text}"
    body = response.json()
    distributions = body["distributions"]
    vocabulary = body["vocabulary"]
    assert len(distributions) == 4, "one distribution per token position"
    assert len(vocabulary) > 0
    for row in distributions:
        assert len(row) == len(vocabulary), "distribution width must match the vocabulary"
        assert all(p >= 0 for p in row)
        assert math.isclose(sum(row), 1.0, abs_tol=SUM_TOLERANCE), "each distribution must sum to 1"


def check_logits_rejects_empty(client: httpx.Client) -> None:
    response = client.post("/v1/logits", json={"tokens": []})
    assert 400 <= response.status_code < 500, "empty token list must be rejected"


def check_embed_contract(client: httpx.Client) -> None:
    response = client.post("/v1/embed", json={"texts": ["a quiet forest", "a quiet forest", "the open sea"]})
    assert response.status_code == 200, f"/v1/embed failed: {response.status_code} {response.text}"
    body = response.json()
    vectors = body["vectors"]
    dim = body["dim"]
    assert len(vectors) == 3
    assert all(len(v) == dim for v in vectors), "embedding batch must be dimension-consistent"
    assert vectors[0] == vectors[1], "identical texts must embed identically"
    for v in vectors:
        norm = math.sqrt(sum(x * x for x in v))
        assert math.isclose(norm, 1.0, abs_tol=1e-6), "vectors must be unit-norm"


def run_conformance(client: httpx.Client, logit_models: tuple[str | None, ...] = (None,)) -> None:
    """Run every protocol check; raises AssertionError on the first failure."""
    check_complete_contract(client)
    check_complete_rejects_bad_mode(client)
    for model in logit_models:
        check_logits_contract(client, model)
    check_logits_rejects_empty(client)
    check_embed_contract(client)

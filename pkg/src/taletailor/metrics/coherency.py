"""Sentence coherency via latent semantic analysis.

Pipeline: build a sentence-by-term tf-idf matrix, project it to a low-rank
space with a truncated SVD, then sum the cosine similarity of the first
sentence against every later one.  A text whose sentences keep circling the
opening sentence's vocabulary and topic scores high.
"""

from __future__ import annotations

import math

import numpy as np

from taletailor.metrics.tokenizer import TokenizedText, words_of

# Cap on the LSA rank; small texts use min(#sentences, #terms) instead.
MAX_RANK = 32


def _tfidf_matrix(sentences: tuple[str, ...] | list[str]) -> np.ndarray:
    sentence_terms = [[w.lower() for w in words_of(s)] for s in sentences]
    vocabulary = sorted({term for terms in sentence_terms for term in terms})
    if not vocabulary:
        return np.zeros((len(sentences), 0))
    col = {term: j for j, term in enumerate(vocabulary)}

    tf = np.zeros((len(sentences), len(vocabulary)))
    for i, terms in enumerate(sentence_terms):
        for term in terms:
            tf[i, col[term]] += 1.0

    n = len(sentences)
    df = np.count_nonzero(tf > 0, axis=0)
    # The +1 keeps terms shared by every sentence in play; with a bare
    # ln(n/df) a text of identical sentences would collapse to a zero matrix.
    idf = np.log(n / df) + 1.0
    return tf * idf


def lsa_embed(sentences: tuple[str, ...] | list[str], max_rank: int = MAX_RANK) -> np.ndarray:
    """Rank-r LSA coordinates of each sentence, r = min(#sentences, #terms, max_rank)."""
    matrix = _tfidf_matrix(sentences)
    if matrix.shape[1] == 0:
        return np.zeros((len(sentences), 1))
    rank = min(matrix.shape[0], matrix.shape[1], max_rank)
    u, s, _ = np.linalg.svd(matrix, full_matrices=False)
    return u[:, :rank] * s[:rank]


def _cosine(a: np.ndarray, b: np.ndarray) -> float:
    na = math.sqrt(float(a @ a))
    nb = math.sqrt(float(b @ b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(a @ b) / (na * nb)


def coherency(t: TokenizedText) -> float:
    """Summed cosine similarity of sentence 1 against sentences 2..n.

    Returns 0 for texts with fewer than two sentences (nothing to compare).
    """
    if len(t.sentences) < 2:
        return 0.0
    embeddings = lsa_embed(t.sentences)
    first = embeddings[0]
    return float(sum(_cosine(first, embeddings[i]) for i in range(1, embeddings.shape[0])))

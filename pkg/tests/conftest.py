from pathlib import Path

import pytest

from taletailor.corpus.frequent import build_frequent_words
from taletailor.generation.embedding import HashEmbedder
from taletailor.generation.ngram import sentence_token_stream, train_ngram
from taletailor.generation.provider import NGramProvider
from taletailor.metrics.context import LogitPair, ScoringContext
from taletailor.metrics.lexicon import SentimentLexicon

DATA_DIR = Path(__file__).parent / "data"

# Small, deterministic training corpus for the built-in generator.
STORY_CORPUS = [
    "The old king smiled at the little dragon. The dragon flew over the high castle. "
    "A little bird sang in the royal garden. The king listened to the merry song.",
    "Once upon a time a brave girl walked into the dark forest. She found a golden key "
    "under an old oak. The key opened a tiny door in the hill. Behind the door lay a "
    "sleeping fox with a silver bell.",
    "The fisherman pulled a strange glowing net from the sea. Inside the net was a small "
    "mermaid with bright eyes. She promised him three wishes for her freedom. He wished "
    "for a warm supper and let her go.",
]


@pytest.fixture(scope="session")
def lexicon() -> SentimentLexicon:
    return SentimentLexicon.load(DATA_DIR / "lexicon.tsv")


@pytest.fixture(scope="session")
def corpus_streams() -> list[list[str]]:
    return [sentence_token_stream(text) for text in STORY_CORPUS]


@pytest.fixture(scope="session")
def ngram_provider(corpus_streams) -> NGramProvider:
    return NGramProvider(train_ngram(corpus_streams, 3), HashEmbedder(dim=64))


@pytest.fixture(scope="session")
def unigram_provider(corpus_streams) -> NGramProvider:
    return NGramProvider(train_ngram(corpus_streams, 1), HashEmbedder(dim=64))


@pytest.fixture(scope="session")
def logit_pair(unigram_provider, ngram_provider) -> LogitPair:
    return LogitPair(preset=unigram_provider, finetuned=ngram_provider)


@pytest.fixture(scope="session")
def scoring_ctx(lexicon, logit_pair) -> ScoringContext:
    return ScoringContext.build(
        lexicon=lexicon,
        frequent_words=build_frequent_words(STORY_CORPUS, fraction=0.2),
        logit_pair=logit_pair,
    )


@pytest.fixture(scope="session")
def partial_ctx(lexicon) -> ScoringContext:
    return ScoringContext.build(
        lexicon=lexicon,
        frequent_words=build_frequent_words(STORY_CORPUS, fraction=0.2),
        logit_pair=None,
    )

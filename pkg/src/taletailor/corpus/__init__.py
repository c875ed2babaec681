"""Corpus ingestion: cleaning, segmentation, prompts, filtering, statistics."""

from taletailor.corpus.clean import (
    clean_text,
    merge_prompt_story,
    segment_extracts,
    split_prompt_story,
    strip_gutenberg_boilerplate,
)
from taletailor.corpus.prompts import DocumentFrequencies, keyword_prompt
from taletailor.corpus.sentiment import LexiconSentimentScorer, filter_by_sentiment
from taletailor.corpus.frequent import build_frequent_words
from taletailor.corpus.stats import CorpusStats, corpus_stats, render_figures, write_frequencies_tsv, write_stats_tsv
from taletailor.corpus.ingest import (
    CleanExtract,
    RawStory,
    load_offensive_words,
    load_stories,
    prepare_corpus,
    read_extracts_jsonl,
    validate_extract,
    write_extracts_jsonl,
)

__all__ = [
    "clean_text",
    "merge_prompt_story",
    "segment_extracts",
    "split_prompt_story",
    "strip_gutenberg_boilerplate",
    "DocumentFrequencies",
    "keyword_prompt",
    "LexiconSentimentScorer",
    "filter_by_sentiment",
    "build_frequent_words",
    "CorpusStats",
    "corpus_stats",
    "render_figures",
    "write_frequencies_tsv",
    "write_stats_tsv",
    "CleanExtract",
    "RawStory",
    "load_offensive_words",
    "load_stories",
    "prepare_corpus",
    "read_extracts_jsonl",
    "validate_extract",
    "write_extracts_jsonl",
]

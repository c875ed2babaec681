"""Command-line interface: corpus ingestion, reports, ranking, retrieval, serving."""

from __future__ import annotations

import sys
from pathlib import Path

import click


@click.group()
def main() -> None:
    """taletailor: story co-writing engine."""


@main.command()
@click.option("--src", required=True, type=click.Path(exists=True), help="Story directory or TSV file.")
@click.option("--format", "source", required=True, type=click.Choice(["gutenberg", "reddit"]))
@click.option("--out", required=True, type=click.Path(), help="Output corpus JSONL.")
@click.option("--offensive", type=click.Path(exists=True), help="Offensive-word list, one word per line.")
@click.option("--lexicon", type=click.Path(exists=True), help="Sentiment lexicon enabling the sentiment filter.")
@click.option("--sentiment-threshold", default=0.9, show_default=True)
@click.option("--limit", default=500, show_default=True, help="Tokens per extract.")
@click.option("--keywords", default=5, show_default=True, help="Keywords per generated prompt.")
def ingest(src, source, out, offensive, lexicon, sentiment_threshold, limit, keywords) -> None:
    """Clean stories and emit prompt-augmented extracts as JSONL."""
    from taletailor.corpus.ingest import load_offensive_words, load_stories, prepare_corpus, write_extracts_jsonl
    from taletailor.corpus.sentiment import LexiconSentimentScorer
    from taletailor.metrics.lexicon import SentimentLexicon

    stories = load_stories(src, source)
    scorer = None
    if lexicon:
        scorer = LexiconSentimentScorer(SentimentLexicon.load(lexicon))
    extracts = prepare_corpus(
        stories,
        offensive_words=load_offensive_words(offensive) if offensive else (),
        sentiment_scorer=scorer,
        sentiment_threshold=sentiment_threshold,
        extract_limit=limit,
        keyword_count=keywords,
    )
    write_extracts_jsonl(extracts, out)
    click.echo(f"{len(stories)} stories -> {len(extracts)} extracts -> {out}")


@main.command()
@click.option("--in", "corpus_path", required=True, type=click.Path(exists=True), help="Corpus JSONL.")
@click.option("--out-dir", default="reports", show_default=True, type=click.Path())
@click.option("--figures/--no-figures", default=True, show_default=True)
def stats(corpus_path, out_dir, figures) -> None:
    """Corpus statistics: TSV tables plus rendered figures."""
    from taletailor.corpus.ingest import read_extracts_jsonl
    from taletailor.corpus.stats import corpus_stats, render_figures, write_frequencies_tsv, write_stats_tsv

    extracts = read_extracts_jsonl(corpus_path)
    result = corpus_stats([e.body for e in extracts])
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_stats_tsv(result, out / "stats.tsv")
    write_frequencies_tsv(result, out / "frequencies.tsv")
    written = [out / "stats.tsv", out / "frequencies.tsv"]
    if figures:
        written += render_figures(result, out)
    click.echo(
        f"{len(result.sentence_counts)} extracts, {result.total_tokens} tokens, "
        f"vocabulary {result.vocabulary_size}, mean {result.mean_sentences:.1f} sentences, "
        f"{result.once_fraction:.1%} of vocabulary occurs once"
    )
    for path in written:
        click.echo(f"wrote {path}")


@main.command()
@click.option("--in", "candidates_path", required=True, type=click.Path(exists=True), help="One candidate per line.")
@click.option("--ctx", "ctx_dir", required=True, type=click.Path(exists=True), help="Scoring-context directory.")
@click.option("--out", type=click.Path(), help="Output TSV (default: stdout).")
def rank(candidates_path, ctx_dir, out) -> None:
    """Score and rank candidate texts; emits rank, total, six features, text."""
    from taletailor.metrics.context import FEATURE_NAMES, ScoringContext
    from taletailor.rerank import rank as rank_texts

    texts = [line for line in Path(candidates_path).read_text("utf-8").splitlines() if line.strip()]
    if not texts:
        raise click.ClickException("no candidates found")
    ctx = ScoringContext.load(ctx_dir)
    ranked = rank_texts(texts, ctx)
    lines = ["\t".join(("rank", "total") + FEATURE_NAMES + ("text",))]
    for position, cand in enumerate(ranked, start=1):
        values = [f"{v:.6f}" for v in cand.raw_metrics.as_tuple()]
        lines.append("\t".join([str(position), f"{cand.normalized_score:.6f}", *values, cand.text]))
    output = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(output, "utf-8")
        click.echo(f"wrote {out}")
    else:
        sys.stdout.write(output)


@main.command()
@click.option("--index", "index_path", required=True, type=click.Path(exists=True), help="TTIX index file.")
@click.option("--query", required=True)
@click.option("--k", default=5, show_default=True)
@click.option("--attributions", type=click.Path(exists=True), help="TSV of image-id<TAB>attribution.")
@click.option("--provider-url", help="Remote provider for /v1/embed (default: built-in hash embedder).")
def retrieve(index_path, query, k, attributions, provider_url) -> None:
    """Embed a text query and list the top-k matching image ids."""
    from taletailor.generation.embedding import HashEmbedder
    from taletailor.generation.remote import RemoteProvider
    from taletailor.images.index import embed_query, load_index
    from taletailor.images.index import retrieve as retrieve_top

    table = {}
    if attributions:
        for line in Path(attributions).read_text("utf-8").splitlines():
            if "\t" in line:
                image_id, attribution = line.split("\t", 1)
                table[image_id] = attribution
    index = load_index(index_path, table)
    provider = RemoteProvider(provider_url) if provider_url else HashEmbedder(dim=index.dim)
    vector = embed_query(query, provider, dim=index.dim)
    result = retrieve_top(index, vector, k)
    for image_id, score in result.results:
        suffix = f"\t{index.attribution(image_id)}" if index.attribution(image_id) else ""
        click.echo(f"{image_id}\t{score:.6f}{suffix}")


@main.command()
@click.option("--port", default=8000, show_default=True, envvar="TALETAILOR_PORT")
@click.option("--host", default="127.0.0.1", show_default=True, envvar="TALETAILOR_HOST")
@click.option("--corpus", "corpus_path", type=click.Path(exists=True), envvar="TALETAILOR_CORPUS")
@click.option("--index", "index_path", type=click.Path(exists=True), envvar="TALETAILOR_INDEX")
@click.option("--attributions", type=click.Path(exists=True), envvar="TALETAILOR_ATTRIBUTIONS")
@click.option("--lexicon", type=click.Path(exists=True), envvar="TALETAILOR_LEXICON")
@click.option("--provider-url", envvar="TALETAILOR_PROVIDER_URL", help="Remote provider; omit for the built-in generator.")
@click.option("--remote-logit-pair", is_flag=True, help="Remote serves both preset and finetuned logits.")
@click.option("--data-dir", type=click.Path(), envvar="TALETAILOR_DATA_DIR")
@click.option("--ui-dir", type=click.Path(exists=True), envvar="TALETAILOR_UI_DIR", help="Static studio bundle to host.")
@click.option("--order", default=3, show_default=True, help="Built-in model order.")
def serve(port, host, corpus_path, index_path, attributions, lexicon, provider_url, remote_logit_pair, data_dir, ui_dir, order) -> None:
    """Run the co-writing service."""
    import uvicorn

    from taletailor.service.app import ServiceSettings, create_app

    settings = ServiceSettings(
        corpus_path=corpus_path,
        index_path=index_path,
        attribution_path=attributions,
        lexicon_path=lexicon,
        provider_url=provider_url,
        remote_logit_pair=remote_logit_pair,
        data_dir=data_dir,
        ui_dir=ui_dir,
        ngram_order=order,
    )
    uvicorn.run(create_app(settings), host=host, port=port)


@main.command("serve-provider")
@click.option("--port", default=8001, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True), help="Corpus JSONL.")
@click.option("--order", default=3, show_default=True)
@click.option("--dim", default=256, show_default=True, help="Embedding dimension.")
def serve_provider(port, host, corpus_path, order, dim) -> None:
    """Expose the built-in models over the provider wire protocol."""
    import uvicorn

    from taletailor.corpus.ingest import read_extracts_jsonl
    from taletailor.generation.embedding import HashEmbedder
    from taletailor.generation.ngram import sentence_token_stream, train_ngram
    from taletailor.generation.server import create_provider_app

    streams = [sentence_token_stream(e.body) for e in read_extracts_jsonl(corpus_path)]
    streams = [s for s in streams if s]
    models = {"finetuned": train_ngram(streams, order), "preset": train_ngram(streams, 1)}
    app = create_provider_app(models, HashEmbedder(dim=dim))
    uvicorn.run(app, host=host, port=port)


@main.command("build-frequent")
@click.option("--in", "corpus_path", required=True, type=click.Path(exists=True), help="Corpus JSONL.")
@click.option("--out", required=True, type=click.Path())
@click.option("--fraction", default=0.07, show_default=True)
def build_frequent(corpus_path, out, fraction) -> None:
    """Derive the frequent-word set used by the simplicity feature."""
    from taletailor.corpus.frequent import build_frequent_words
    from taletailor.corpus.ingest import read_extracts_jsonl

    extracts = read_extracts_jsonl(corpus_path)
    frequent = build_frequent_words((e.body for e in extracts), fraction)
    frequent.save(out)
    click.echo(f"{len(frequent)} words -> {out}")


if __name__ == "__main__":
    main()

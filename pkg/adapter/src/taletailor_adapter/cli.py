"""Adapter CLI: serve the protocol or export an image folder to TTIX."""

from __future__ import annotations

import click


@click.group()
def main() -> None:
    """taletailor model adapter."""


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8001, show_default=True)
@click.option("--preset", default="wordchain:1:builtin:preset", show_default=True, help="Preset LM identifier.")
@click.option(
    "--finetuned", default="wordchain:3:builtin:finetuned", show_default=True, help="Fine-tuned LM identifier."
)
@click.option("--encoder", default="palette", show_default=True)
@click.option("--max-batch", default=64, show_default=True)
def serve(host, port, preset, finetuned, encoder, max_batch) -> None:
    """Run the provider-protocol endpoint."""
    import uvicorn

    from taletailor_adapter.config import AdapterConfig
    from taletailor_adapter.server import create_adapter_app

    config = AdapterConfig(
        preset_model=preset,
        finetuned_model=finetuned,
        encoder=encoder,
        host=host,
        port=port,
        max_batch=max_batch,
    )
    uvicorn.run(create_adapter_app(config), host=host, port=port)


@main.command("export-index")
@click.option("--images", required=True, type=click.Path(exists=True, file_okay=False), help="Image folder.")
@click.option("--out", required=True, type=click.Path(), help="Output TTIX file.")
@click.option("--encoder", default="palette", show_default=True)
def export_index_cmd(images, out, encoder) -> None:
    """Encode a folder of images into a TTIX index file."""
    from taletailor_adapter.config import resolve_encoder
    from taletailor_adapter.ttix import export_index

    count = export_index(images, resolve_encoder(encoder), out)
    click.echo(f"{count} images -> {out}")


if __name__ == "__main__":
    main()

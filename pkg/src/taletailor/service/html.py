"""Deterministic HTML snapshot of a story for sharing and later analysis.

Machine and human text carry distinct markup classes so the generated-vs-
written ratio stays recoverable from the snapshot alone.
"""

from __future__ import annotations

import html

from taletailor.service.models import IMAGE, StoryDocument


def render_snapshot(document: StoryDocument) -> str:
    parts = [
        "<!DOCTYPE html>",
        '<html><head><meta charset="utf-8">',
        f"<title>{html.escape(document.title)}</title>",
        "<style>",
        ".block.machine{background:#dbe9ff;}",
        ".block.human{background:transparent;}",
        ".block.image{font-style:italic;color:#555;}",
        "</style></head><body>",
        f"<h1>{html.escape(document.title)}</h1>",
        f'<article data-story-id="{html.escape(document.id)}">',
    ]
    for block in document.blocks:
        if block.kind == IMAGE:
            parts.append(
                f'<figure class="block image" data-image-id="{html.escape(block.image_id)}"'
                f' data-theme="{html.escape(block.theme)}">'
                f"<figcaption>{html.escape(block.query)}</figcaption></figure>"
            )
        else:
            edited = " edited" if block.edited else ""
            parts.append(
                f'<p class="block {block.provenance}{edited}">{html.escape(block.content)}</p>'
            )
    parts.append("</article></body></html>")
    return "\n".join(parts)

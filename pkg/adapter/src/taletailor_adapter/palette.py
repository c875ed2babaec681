"""Joint text-image encoder over a fixed color palette.

Images and texts land in the same 16-dimensional space:

    dims 0..11  -- fraction of pixels nearest each named color prototype
                   (image side) / relative frequency of that color's words
                   (text side)
    dim  12     -- mean brightness        / "bright light pale" words
    dim  13     -- mean darkness          / "dark dim shadow" words
    dims 14..15 -- reserved (always 0)

Vectors are L2-normalized; a text mentioning no palette vocabulary maps to
the unit vector on dim 0.  This is a deterministic, dependency-light stand-in
for a neural joint encoder: an image's own color-descriptive caption lands
nearest that image.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path

import numpy as np
from PIL import Image

logger = logging.getLogger(__name__)

DIM = 16

PALETTE: list[tuple[str, tuple[int, int, int]]] = [
    ("red", (220, 40, 40)),
    ("orange", (240, 140, 40)),
    ("yellow", (240, 220, 60)),
    ("green", (60, 180, 70)),
    ("cyan", (60, 200, 210)),
    ("blue", (50, 90, 220)),
    ("purple", (150, 70, 200)),
    ("pink", (240, 150, 190)),
    ("brown", (130, 80, 40)),
    ("black", (25, 25, 25)),
    ("white", (240, 240, 240)),
    ("gray", (128, 128, 128)),
]

SYNONYMS = {
    "crimson": "red",
    "scarlet": "red",
    "ruby": "red",
    "amber": "orange",
    "gold": "yellow",
    "golden": "yellow",
    "emerald": "green",
    "teal": "cyan",
    "turquoise": "cyan",
    "azure": "blue",
    "navy": "blue",
    "violet": "purple",
    "magenta": "pink",
    "rose": "pink",
    "chocolate": "brown",
    "tan": "brown",
    "snowy": "white",
    "ivory": "white",
    "grey": "gray",
    "silver": "gray",
}

BRIGHT_WORDS = {"bright", "light", "pale", "sunny", "shining", "glowing"}
DARK_WORDS = {"dark", "dim", "shadow", "dusky", "midnight", "gloomy"}

_WORD_RE = re.compile(r"[a-z]+")

_COLOR_INDEX = {name: i for i, (name, _) in enumerate(PALETTE)}
_PROTOTYPES = np.array([rgb for _, rgb in PALETTE], dtype=np.float64)


def _normalize(vec: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        out = np.zeros(DIM)
        out[0] = 1.0
        return out
    return vec / norm


class PaletteEncoder:
    dim = DIM

    def embed_text(self, text: str) -> np.ndarray:
        vec = np.zeros(DIM)
        for word in _WORD_RE.findall(text.lower()):
            word = SYNONYMS.get(word, word)
            if word in _COLOR_INDEX:
                vec[_COLOR_INDEX[word]] += 1.0
            elif word in BRIGHT_WORDS:
                vec[12] += 1.0
            elif word in DARK_WORDS:
                vec[13] += 1.0
        return _normalize(vec)

    def embed_texts(self, texts: list[str]) -> list[np.ndarray]:
        return [self.embed_text(t) for t in texts]

    def embed_image(self, path: str | Path) -> np.ndarray:
        with Image.open(path) as img:
            pixels = np.asarray(img.convert("RGB").resize((32, 32)), dtype=np.float64).reshape(-1, 3)
        distances = np.linalg.norm(pixels[:, None, :] - _PROTOTYPES[None, :, :], axis=2)
        nearest = np.argmin(distances, axis=1)
        vec = np.zeros(DIM)
        for color_id, count in zip(*np.unique(nearest, return_counts=True)):
            vec[int(color_id)] = count / pixels.shape[0]
        brightness = float(pixels.mean()) / 255.0
        vec[12] = max(brightness - 0.5, 0.0)
        vec[13] = max(0.5 - brightness, 0.0)
        return _normalize(vec)

    def embed_image_folder(self, folder: str | Path) -> dict[str, np.ndarray]:
        """Encode every readable image in a folder; unreadable files are
        skipped with a warning."""
        results: dict[str, np.ndarray] = {}
        for path in sorted(Path(folder).iterdir()):
            if not path.is_file():
                continue
            try:
                results[path.stem] = self.embed_image(path)
            except Exception:
                logger.warning("skipping unreadable image %s", path, exc_info=True)
        return results

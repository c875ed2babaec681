"""TTIX index writer.

Byte layout (little-endian throughout):

    "TTIX" | u32 version=1 | u32 dim | u64 count
    per entry: u16 id-length | UTF-8 id | dim * f32
"""

from __future__ import annotations

import struct
from pathlib import Path
from collections.abc import Mapping

import numpy as np

MAGIC = b"TTIX"
VERSION = 1


def write_ttix(path: str | Path, entries: Mapping[str, np.ndarray], dim: int) -> None:
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<IIQ", VERSION, dim, len(entries)))
        for image_id, vector in entries.items():
            vec = np.asarray(vector, dtype=np.float32)
            if vec.shape != (dim,):
                raise ValueError(f"entry {image_id!r} has shape {vec.shape}, expected ({dim},)")
            encoded = image_id.encode("utf-8")
            fh.write(struct.pack("<H", len(encoded)))
            fh.write(encoded)
            fh.write(vec.tobytes())


def export_index(image_folder: str | Path, encoder, out_path: str | Path) -> int:
    """Encode every readable image in ``image_folder`` into a TTIX file.

    Returns the number of entries written.
    """
    entries = encoder.embed_image_folder(image_folder)
    write_ttix(out_path, entries, encoder.dim)
    return len(entries)

"""Exported TTIX files must load in the main engine, and an image's own
caption-like description must retrieve it top-1 on a small disjoint set."""

import numpy as np
import pytest
from PIL import Image

from taletailor_adapter.palette import PaletteEncoder
from taletailor_adapter.ttix import export_index

from taletailor.images.index import load_index, retrieve

TOY_SET = [
    ("apple", (220, 40, 40), "a bright red apple"),
    ("pumpkin", (240, 140, 40), "an orange pumpkin"),
    ("lemon", (240, 220, 60), "a yellow lemon"),
    ("meadow", (60, 180, 70), "a green meadow"),
    ("lagoon", (60, 200, 210), "a cyan lagoon"),
    ("sky", (50, 90, 220), "a blue sky"),
    ("plum", (150, 70, 200), "a purple plum"),
    ("blossom", (240, 150, 190), "a pink blossom"),
    ("acorn", (130, 80, 40), "a brown acorn"),
    ("night", (25, 25, 25), "a dark black night"),
]


@pytest.fixture(scope="module")
def image_folder(tmp_path_factory):
    folder = tmp_path_factory.mktemp("toy-images")
    for name, rgb, _ in TOY_SET:
        Image.new("RGB", (48, 48), rgb).save(folder / f"{name}.png")
    (folder / "broken.png").write_bytes(b"this is not an image")
    return folder


def test_export_counts_and_loads_in_primary_engine(image_folder, tmp_path):
    out = tmp_path / "toy.ttix"
    count = export_index(image_folder, PaletteEncoder(), out)
    assert count == 10  # the broken file is skipped with a warning

    index = load_index(out)
    assert len(index) == 10
    assert index.dim == PaletteEncoder.dim
    norms = np.linalg.norm(index.matrix.astype(np.float64), axis=1)
    np.testing.assert_allclose(norms, 1.0, atol=1e-6)


def test_three_images_three_entries(image_folder, tmp_path):
    small = tmp_path / "small"
    small.mkdir()
    for name, rgb, _ in TOY_SET[:3]:
        Image.new("RGB", (20, 20), rgb).save(small / f"{name}.png")
    out = tmp_path / "small.ttix"
    assert export_index(small, PaletteEncoder(), out) == 3


def test_own_caption_ranks_top_one(image_folder, tmp_path):
    out = tmp_path / "toy.ttix"
    export_index(image_folder, PaletteEncoder(), out)
    index = load_index(out)
    encoder = PaletteEncoder()
    for name, _, caption in TOY_SET:
        query = encoder.embed_text(caption)
        result = retrieve(index, query, 1)
        assert result.results[0][0] == name, f"{caption!r} retrieved {result.results[0][0]!r}"


def test_round_trip_via_wire_embed(client, image_folder, tmp_path):
    out = tmp_path / "toy.ttix"
    export_index(image_folder, PaletteEncoder(), out)
    index = load_index(out)
    body = client.post("/v1/embed", json={"texts": ["a bright red apple"]}).json()
    assert body["dim"] == index.dim
    result = retrieve(index, np.asarray(body["vectors"][0]), 1)
    assert result.results[0][0] == "apple"

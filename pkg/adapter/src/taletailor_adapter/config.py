"""Adapter configuration and model-identifier resolution.

Identifier schemes:

    wordchain:<order>:<corpus-path>   self-contained word-chain LM
    wordchain:<order>:builtin:<name>  ditto, over a corpus shipped with the
                                      package (names: "preset", "finetuned")
    hf:<model-name>                   hook for a transformers-backed causal
                                      LM; raises at startup when the optional
                                      neural stack is not installed

    palette                           joint text-image color-space encoder
    hf:<encoder-name>                 ditto, for a neural joint encoder
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from taletailor_adapter.palette import PaletteEncoder
from taletailor_adapter.wordchain import WordChain


@dataclass(frozen=True)
class AdapterConfig:
    preset_model: str = "wordchain:1:builtin:preset"
    finetuned_model: str = "wordchain:3:builtin:finetuned"
    encoder: str = "palette"
    host: str = "127.0.0.1"
    port: int = 8001
    max_batch: int = 64

    def __post_init__(self) -> None:
        if self.max_batch < 1:
            raise ValueError("max_batch must be >= 1")


def _builtin_corpus(name: str) -> str:
    return resources.files("taletailor_adapter").joinpath(f"data/{name}.txt").read_text("utf-8")


def resolve_model(identifier: str) -> WordChain:
    if identifier.startswith("wordchain:"):
        parts = identifier.split(":", 3)
        if len(parts) < 3:
            raise ValueError(f"malformed wordchain identifier {identifier!r}")
        order = int(parts[1])
        if parts[2] == "builtin":
            if len(parts) != 4:
                raise ValueError(f"malformed builtin identifier {identifier!r}")
            return WordChain(order, _builtin_corpus(parts[3]))
        return WordChain.from_file(parts[2], order)
    if identifier.startswith("hf:"):
        try:
            import transformers  # noqa: F401
        except ImportError as exc:
            raise RuntimeError(
                f"model {identifier!r} needs the optional neural stack (torch + transformers), "
                "which is not installed"
            ) from exc
        raise NotImplementedError("transformers-backed models are a deployment-side extension")
    raise ValueError(f"unknown model identifier scheme: {identifier!r}")


def resolve_encoder(identifier: str) -> PaletteEncoder:
    if identifier == "palette":
        return PaletteEncoder()
    if identifier.startswith("hf:"):
        raise RuntimeError(
            f"encoder {identifier!r} needs the optional neural stack, which is not installed"
        )
    raise ValueError(f"unknown encoder identifier: {identifier!r}")

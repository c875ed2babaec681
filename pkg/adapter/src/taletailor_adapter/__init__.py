"""Provider-protocol adapter: wraps a preset/fine-tuned language-model pair and
a joint text-image encoder behind the HTTP wire protocol, plus a one-shot
TTIX index exporter.

The boundary with the main engine is strictly HTTP + JSON and TTIX bytes; no
code is shared.
"""

from taletailor_adapter.config import AdapterConfig, resolve_encoder, resolve_model
from taletailor_adapter.server import create_adapter_app
from taletailor_adapter.ttix import export_index, write_ttix

__all__ = [
    "AdapterConfig",
    "resolve_encoder",
    "resolve_model",
    "create_adapter_app",
    "export_index",
    "write_ttix",
]

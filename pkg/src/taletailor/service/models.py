"""Story documents, blocks, feedback records, and analytics."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

TEXT = "text"
IMAGE = "image"
HUMAN = "human"
MACHINE = "machine"

DRAFT = "draft"
PUBLISHED = "published"

# The eight agree/disagree statements of the submission form, rated 1-5.
LIKERT_KEYS = (
    "correct_grammar",
    "plausible_order",
    "makes_sense",
    "avoids_repetition",
    "interesting_language",
    "high_quality",
    "enjoyable",
    "single_theme",
)

DECLINE_BUCKETS = ("never", "25", "50", "75", "always")
USAGE_MODES = ("fast", "hq", "both")

FREE_TEXT_KEYS = ("liked", "disliked", "comments")


@dataclass(frozen=True)
class Block:
    """One story block: either authored text or a retrieved image.

    Text blocks carry provenance (who wrote them) and whether a human edited
    machine text afterwards; image blocks record the retrieval query and the
    style theme active at insertion.
    """

    block_id: str
    kind: str  # text | image
    content: str = ""
    provenance: str = HUMAN
    edited: bool = False
    image_id: str = ""
    query: str = ""
    theme: str = ""

    def __post_init__(self) -> None:
        if self.kind not in (TEXT, IMAGE):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.kind == TEXT:
            if self.provenance not in (HUMAN, MACHINE):
                raise ValueError(f"unknown provenance {self.provenance!r}")
            if not self.content:
                raise ValueError("text blocks must be nonempty")
        if self.kind == IMAGE and not self.image_id:
            raise ValueError("image blocks must reference an image id")

    def to_dict(self) -> dict[str, Any]:
        if self.kind == TEXT:
            return {
                "block_id": self.block_id,
                "kind": TEXT,
                "content": self.content,
                "provenance": self.provenance,
                "edited": self.edited,
            }
        return {
            "block_id": self.block_id,
            "kind": IMAGE,
            "image_id": self.image_id,
            "query": self.query,
            "theme": self.theme,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Block":
        return cls(
            block_id=data["block_id"],
            kind=data["kind"],
            content=data.get("content", ""),
            provenance=data.get("provenance", HUMAN),
            edited=bool(data.get("edited", False)),
            image_id=data.get("image_id", ""),
            query=data.get("query", ""),
            theme=data.get("theme", ""),
        )


@dataclass(frozen=True)
class StoryDocument:
    id: str
    title: str
    blocks: tuple[Block, ...]
    created_at: str
    updated_at: str
    status: str = DRAFT
    version: int = 1

    def with_blocks(self, blocks: tuple[Block, ...], updated_at: str) -> "StoryDocument":
        return replace(self, blocks=blocks, updated_at=updated_at, version=self.version + 1)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "title": self.title,
            "blocks": [b.to_dict() for b in self.blocks],
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "status": self.status,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "StoryDocument":
        return cls(
            id=data["id"],
            title=data["title"],
            blocks=tuple(Block.from_dict(b) for b in data["blocks"]),
            created_at=data["created_at"],
            updated_at=data["updated_at"],
            status=data.get("status", DRAFT),
            version=data.get("version", 1),
        )


class FeedbackValidationError(ValueError):
    def __init__(self, missing: list[str], invalid: list[str]):
        self.missing = missing
        self.invalid = invalid
        problems = []
        if missing:
            problems.append(f"missing: {', '.join(missing)}")
        if invalid:
            problems.append(f"invalid: {', '.join(invalid)}")
        super().__init__("; ".join(problems))


@dataclass(frozen=True)
class FeedbackRecord:
    """Submission-form feedback bound to a published story."""

    ratings: dict[str, int]  # the eight 1-5 statements
    decline_rate: str
    autocomplete_usage: str
    liked: str = ""
    disliked: str = ""
    comments: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "ratings": dict(self.ratings),
            "decline_rate": self.decline_rate,
            "autocomplete_usage": self.autocomplete_usage,
            "liked": self.liked,
            "disliked": self.disliked,
            "comments": self.comments,
        }

    @classmethod
    def validate(cls, payload: dict[str, Any]) -> "FeedbackRecord":
        missing: list[str] = []
        invalid: list[str] = []
        ratings_raw = payload.get("ratings")
        ratings: dict[str, int] = {}
        if not isinstance(ratings_raw, dict):
            missing.append("ratings")
        else:
            for key in LIKERT_KEYS:
                if key not in ratings_raw:
                    missing.append(f"ratings.{key}")
                    continue
                value = ratings_raw[key]
                if not isinstance(value, int) or not (1 <= value <= 5):
                    invalid.append(f"ratings.{key}")
                else:
                    ratings[key] = value
        decline = payload.get("decline_rate")
        if decline is None:
            missing.append("decline_rate")
        elif str(decline) not in DECLINE_BUCKETS:
            invalid.append("decline_rate")
        usage = payload.get("autocomplete_usage")
        if usage is None:
            missing.append("autocomplete_usage")
        elif str(usage) not in USAGE_MODES:
            invalid.append("autocomplete_usage")
        if missing or invalid:
            raise FeedbackValidationError(missing, invalid)
        return cls(
            ratings=ratings,
            decline_rate=str(decline),
            autocomplete_usage=str(usage),
            liked=str(payload.get("liked", "")),
            disliked=str(payload.get("disliked", "")),
            comments=str(payload.get("comments", "")),
        )


@dataclass(frozen=True)
class StoryAnalytics:
    """Machine-vs-human composition of one story, recomputable from blocks."""

    machine_fraction: float  # of text characters
    human_fraction: float
    image_count: int
    block_counts: dict[str, int]  # text blocks by provenance
    machine_edit_count: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "machine_fraction": self.machine_fraction,
            "human_fraction": self.human_fraction,
            "image_count": self.image_count,
            "block_counts": dict(self.block_counts),
            "machine_edit_count": self.machine_edit_count,
        }


def compute_analytics(document: StoryDocument) -> StoryAnalytics:
    machine_chars = 0
    human_chars = 0
    counts = {HUMAN: 0, MACHINE: 0}
    images = 0
    edits = 0
    for block in document.blocks:
        if block.kind == IMAGE:
            images += 1
            continue
        counts[block.provenance] += 1
        if block.provenance == MACHINE:
            machine_chars += len(block.content)
            if block.edited:
                edits += 1
        else:
            human_chars += len(block.content)
    total = machine_chars + human_chars
    machine_fraction = machine_chars / total if total else 0.0
    human_fraction = human_chars / total if total else 0.0
    return StoryAnalytics(
        machine_fraction=machine_fraction,
        human_fraction=human_fraction,
        image_count=images,
        block_counts=counts,
        machine_edit_count=edits,
    )

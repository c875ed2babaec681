"""Append-friendly story persistence: JSON-lines event log plus snapshots.

Every mutation appends one event; a full snapshot is rewritten every
SNAPSHOT_EVERY events so reload cost stays bounded.  With no data directory
the store runs purely in memory (tests, throwaway sessions).
"""

from __future__ import annotations

import hashlib
import json
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from taletailor.service.models import (
    DRAFT,
    HUMAN,
    MACHINE,
    PUBLISHED,
    TEXT,
    Block,
    FeedbackRecord,
    StoryDocument,
)

SNAPSHOT_EVERY = 50

EVENTS_FILE = "events.jsonl"
SNAPSHOT_FILE = "snapshot.json"


class StoryNotFoundError(KeyError):
    pass


class VersionConflictError(RuntimeError):
    pass


class StoryPublishedError(RuntimeError):
    pass


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class StoryStore:
    def __init__(self, data_dir: str | Path | None = None):
        self._lock = threading.Lock()
        self._stories: dict[str, StoryDocument] = {}
        self._feedback: dict[str, FeedbackRecord] = {}
        self._snapshots: dict[str, str] = {}  # share token -> frozen HTML
        self._share_tokens: dict[str, str] = {}  # story id -> token
        self._events_since_snapshot = 0
        self._event_seq = 0
        self._data_dir = Path(data_dir) if data_dir else None
        if self._data_dir:
            self._data_dir.mkdir(parents=True, exist_ok=True)
            self._replay()

    # -- persistence ------------------------------------------------------

    def _replay(self) -> None:
        assert self._data_dir is not None
        snapshot_path = self._data_dir / SNAPSHOT_FILE
        replay_from = 0
        if snapshot_path.exists():
            snap = json.loads(snapshot_path.read_text("utf-8"))
            self._stories = {sid: StoryDocument.from_dict(doc) for sid, doc in snap["stories"].items()}
            self._snapshots = dict(snap.get("snapshots", {}))
            self._share_tokens = dict(snap.get("share_tokens", {}))
            self._feedback = {
                sid: FeedbackRecord(**fb) for sid, fb in snap.get("feedback", {}).items()
            }
            replay_from = snap.get("event_seq", 0)
        self._event_seq = replay_from
        events_path = self._data_dir / EVENTS_FILE
        if events_path.exists():
            for line in events_path.read_text("utf-8").splitlines():
                if not line.strip():
                    continue
                event = json.loads(line)
                if event["seq"] <= replay_from:
                    continue
                self._apply(event)
                self._events_since_snapshot += 1
                self._event_seq = max(self._event_seq, event["seq"])

    def _apply(self, event: dict[str, Any]) -> None:
        kind = event["type"]
        if kind == "story":
            doc = StoryDocument.from_dict(event["document"])
            self._stories[doc.id] = doc
        elif kind == "publish":
            doc = StoryDocument.from_dict(event["document"])
            self._stories[doc.id] = doc
            self._feedback[doc.id] = FeedbackRecord(**event["feedback"])
            self._snapshots[event["token"]] = event["html"]
            self._share_tokens[doc.id] = event["token"]

    def _record(self, event: dict[str, Any]) -> None:
        if not self._data_dir:
            return
        self._event_seq += 1
        event = {"seq": self._event_seq, **event}
        with open(self._data_dir / EVENTS_FILE, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, ensure_ascii=False) + "\n")
        self._events_since_snapshot += 1
        if self._events_since_snapshot >= SNAPSHOT_EVERY:
            self._write_snapshot()

    def _write_snapshot(self) -> None:
        assert self._data_dir is not None
        snap = {
            "event_seq": self._event_seq,
            "stories": {sid: doc.to_dict() for sid, doc in self._stories.items()},
            "feedback": {sid: fb.to_dict() for sid, fb in self._feedback.items()},
            "snapshots": self._snapshots,
            "share_tokens": self._share_tokens,
        }
        tmp = self._data_dir / (SNAPSHOT_FILE + ".tmp")
        tmp.write_text(json.dumps(snap, ensure_ascii=False), "utf-8")
        tmp.replace(self._data_dir / SNAPSHOT_FILE)
        self._events_since_snapshot = 0

    # -- story operations --------------------------------------------------

    def create(self, title: str = "") -> StoryDocument:
        with self._lock:
            story_id = uuid.uuid4().hex[:12]
            now = _now()
            doc = StoryDocument(
                id=story_id, title=title or "Untitled story", blocks=(), created_at=now, updated_at=now
            )
            self._stories[story_id] = doc
            self._record({"type": "story", "document": doc.to_dict()})
            return doc

    def get(self, story_id: str) -> StoryDocument:
        doc = self._stories.get(story_id)
        if doc is None:
            raise StoryNotFoundError(story_id)
        return doc

    def _require_draft(self, story_id: str) -> StoryDocument:
        doc = self.get(story_id)
        if doc.status == PUBLISHED:
            raise StoryPublishedError(f"story {story_id} is published and immutable")
        return doc

    def update_blocks(self, story_id: str, version: int, blocks_payload: list[dict[str, Any]]) -> StoryDocument:
        """Replace the block list, reconciling provenance server-side.

        Existing blocks keep their identity by block_id; machine text whose
        content changes is marked edited.  Brand-new blocks are always human
        text: machine and image blocks enter only through suggestion accepts.
        """
        with self._lock:
            doc = self._require_draft(story_id)
            if version != doc.version:
                raise VersionConflictError(f"expected version {doc.version}, got {version}")
            existing = {b.block_id: b for b in doc.blocks}
            new_blocks: list[Block] = []
            for item in blocks_payload:
                block_id = item.get("block_id") or ""
                previous = existing.get(block_id)
                if previous is not None:
                    if previous.kind == TEXT:
                        content = item.get("content", previous.content)
                        edited = previous.edited or (
                            previous.provenance == MACHINE and content != previous.content
                        )
                        new_blocks.append(
                            Block(
                                block_id=previous.block_id,
                                kind=TEXT,
                                content=content,
                                provenance=previous.provenance,
                                edited=edited,
                            )
                        )
                    else:
                        new_blocks.append(
                            Block(
                                block_id=previous.block_id,
                                kind=previous.kind,
                                image_id=previous.image_id,
                                query=previous.query,
                                theme=item.get("theme", previous.theme),
                            )
                        )
                else:
                    new_blocks.append(
                        Block(
                            block_id=uuid.uuid4().hex[:12],
                            kind=TEXT,
                            content=item.get("content", ""),
                            provenance=HUMAN,
                        )
                    )
            updated = doc.with_blocks(tuple(new_blocks), _now())
            self._stories[story_id] = updated
            self._record({"type": "story", "document": updated.to_dict()})
            return updated

    def append_block(self, story_id: str, block: Block) -> StoryDocument:
        """Used by suggestion accepts; the only path that creates machine blocks."""
        with self._lock:
            doc = self._require_draft(story_id)
            updated = doc.with_blocks(doc.blocks + (block,), _now())
            self._stories[story_id] = updated
            self._record({"type": "story", "document": updated.to_dict()})
            return updated

    def publish(self, story_id: str, feedback: FeedbackRecord, html: str) -> str:
        with self._lock:
            doc = self._require_draft(story_id)
            if not doc.blocks:
                raise ValueError("cannot publish an empty story")
            frozen = StoryDocument(
                id=doc.id,
                title=doc.title,
                blocks=doc.blocks,
                created_at=doc.created_at,
                updated_at=_now(),
                status=PUBLISHED,
                version=doc.version + 1,
            )
            token = hashlib.sha256(f"{doc.id}:{frozen.version}".encode()).hexdigest()[:16]
            self._stories[story_id] = frozen
            self._feedback[story_id] = feedback
            self._snapshots[token] = html
            self._share_tokens[story_id] = token
            self._record(
                {
                    "type": "publish",
                    "document": frozen.to_dict(),
                    "feedback": feedback.to_dict(),
                    "token": token,
                    "html": html,
                }
            )
            return token

    def share_html(self, token: str) -> str:
        html = self._snapshots.get(token)
        if html is None:
            raise StoryNotFoundError(token)
        return html

    def share_token(self, story_id: str) -> str | None:
        return self._share_tokens.get(story_id)

    def feedback_for(self, story_id: str) -> FeedbackRecord | None:
        return self._feedback.get(story_id)

    def new_block_id(self) -> str:
        return uuid.uuid4().hex[:12]

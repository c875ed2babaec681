"""HTTP co-writing service: sessions, suggestions, publishing, analytics."""

from taletailor.service.models import (
    Block,
    FeedbackRecord,
    FeedbackValidationError,
    StoryAnalytics,
    StoryDocument,
    compute_analytics,
)
from taletailor.service.store import (
    StoryNotFoundError,
    StoryPublishedError,
    StoryStore,
    VersionConflictError,
)
from taletailor.service.app import ServiceSettings, create_app

__all__ = [
    "Block",
    "FeedbackRecord",
    "FeedbackValidationError",
    "StoryAnalytics",
    "StoryDocument",
    "compute_analytics",
    "StoryNotFoundError",
    "StoryPublishedError",
    "StoryStore",
    "VersionConflictError",
    "ServiceSettings",
    "create_app",
]

"""
Append-only JSON-lines cache of extremal records.
"""

from __future__ import annotations

import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, ValidationError

from search.models import ExtremalRecord
from search.validation import revalidate

logger = logging.getLogger(__name__)

TOOL_VERSION = "0.1.0"


class CacheEntry(BaseModel):
    key: str = Field(description="kind(params)@budget fingerprint")
    record: ExtremalRecord
    created_at: datetime = Field(default_factory=datetime.now)
    tool_version: str = TOOL_VERSION


class ResultCache:
    """
    Records keyed by kind, parameters and budget fingerprint.

    Corrupt lines are skipped with a warning; a later line for the same key
    replaces an earlier one. Stored witnesses are re-validated before reuse.
    """

    def __init__(self, path: str | Path) -> None:
        """
        Args:
            path: JSON-lines file; created with its directory on first write
        """
        self.path = Path(path)
        self._entries: Optional[dict[str, CacheEntry]] = None

    def _load(self) -> dict[str, CacheEntry]:
        if self._entries is not None:
            return self._entries
        entries: dict[str, CacheEntry] = {}
        if self.path.exists():
            for lineno, line in enumerate(self.path.read_text(encoding="utf-8").splitlines(), 1):
                if not line.strip():
                    continue
                try:
                    entry = CacheEntry.model_validate_json(line)
                except ValidationError as e:
                    logger.warning("%s:%d: skipping corrupt cache line (%s)", self.path, lineno, e.errors()[0]["msg"])
                    continue
                entries[entry.key] = entry
            logger.debug("loaded %d cache entries from %s", len(entries), self.path)
        self._entries = entries
        return entries

    def get(self, key: str) -> Optional[ExtremalRecord]:
        """Cached record for key with cached=True, or None when absent or failing re-validation."""
        entry = self._load().get(key)
        if entry is None:
            return None
        if not revalidate(entry.record):
            return None
        return entry.record.model_copy(update={"cached": True})

    def put(self, record: ExtremalRecord) -> None:
        entry = CacheEntry(key=record.key(), record=record.model_copy(update={"cached": False}))
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as f:
            f.write(entry.model_dump_json() + "\n")
        self._load()[entry.key] = entry

    def __len__(self) -> int:
        return len(self._load())

    def __contains__(self, key: str) -> bool:
        return key in self._load()

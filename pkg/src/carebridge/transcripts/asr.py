"""Speech-recognition adapter contract.

Real engines (cloud or on-device) live behind this interface; the core
pipeline never sees audio formats or dialects directly. The reference
adapter reads UTF-8 text embedded in the payload as `speaker|text`, which
keeps the whole pipeline deterministic for tests and demos.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol


@dataclass(frozen=True)
class SegmentDraft:
    speaker: str  # patient | physician | unknown
    text: str
    start_ms: int = 0
    end_ms: int = 0
    final: bool = True


class AsrAdapter(Protocol):
    def transcribe(
        self,
        payload: bytes,
        dialect_hint: str | None = None,
        deadline_s: float | None = None,
    ) -> list[SegmentDraft]: ...


class TextPayloadAdapter:
    """Reference adapter: payload bytes are `speaker|text` UTF-8."""

    def transcribe(self, payload, dialect_hint=None, deadline_s=None):
        text = payload.decode("utf-8")
        speaker, sep, content = text.partition("|")
        if not sep:
            speaker, content = "unknown", text
        if speaker not in ("patient", "physician"):
            speaker = "unknown"
        return [SegmentDraft(speaker=speaker, text=content)]


class FailingAsrAdapter:
    """Test double for the adapter-failure contract."""

    def transcribe(self, payload, dialect_hint=None, deadline_s=None):
        raise RuntimeError("speech engine unavailable")

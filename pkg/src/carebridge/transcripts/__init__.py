from .asr import AsrAdapter, SegmentDraft, TextPayloadAdapter
from .pipeline import (
    AudioChunk,
    ConsultationSession,
    SessionEvent,
    SessionManager,
    SessionState,
    Speaker,
    TermHighlight,
    TranscriptSegment,
    annotate_segment,
    replay_chunk_log,
)

__all__ = [
    "AsrAdapter",
    "SegmentDraft",
    "TextPayloadAdapter",
    "AudioChunk",
    "ConsultationSession",
    "SessionEvent",
    "SessionManager",
    "SessionState",
    "Speaker",
    "TermHighlight",
    "TranscriptSegment",
    "annotate_segment",
    "replay_chunk_log",
]

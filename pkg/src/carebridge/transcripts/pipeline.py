"""Consultation sessions and the streaming annotation pipeline.

Chunks arrive per session, the ASR adapter turns them into transcript
segments, and every final segment is annotated with term highlights
immediately (never batched at close). Event order within a session is
strict: a segment event always precedes its highlight events.
"""

from __future__ import annotations

import logging
import threading
import time
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Callable, Iterable

from ..errors import DuplicateError, NotFoundError, StateError
from ..knowledge.graph import KnowledgeGraph
from ..knowledge.matching import TermMatch, find_terms
from .asr import AsrAdapter, TextPayloadAdapter

logger = logging.getLogger(__name__)

LATENCY_BUDGET_MS = 1400


class SessionState(str, Enum):
    PRE = "pre"
    LIVE = "live"
    CLOSED = "closed"


class Speaker(str, Enum):
    PATIENT = "patient"
    PHYSICIAN = "physician"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class AudioChunk:
    session_id: str
    seq: int
    captured_at: datetime
    payload: bytes
    dialect_hint: str | None = None


@dataclass(frozen=True)
class TranscriptSegment:
    session_id: str
    seq: int
    speaker: Speaker
    text: str
    start_ms: int
    end_ms: int
    final: bool = True


@dataclass(frozen=True)
class TermHighlight:
    session_id: str
    segment_seq: int
    match: TermMatch
    emitted_at: datetime


@dataclass(frozen=True)
class SessionEvent:
    type: str  # segment | highlight | pipeline_error
    session_id: str
    seq: int  # monotone event sequence per session
    payload: dict


@dataclass
class ConsultationSession:
    id: str
    patient_id: str
    physician_id: str
    state: SessionState = SessionState.LIVE
    opened_at: datetime = field(default_factory=datetime.now)
    closed_at: datetime | None = None
    segments: list[TranscriptSegment] = field(default_factory=list)
    highlights: list[TermHighlight] = field(default_factory=list)
    seen_chunk_seqs: set[int] = field(default_factory=set)
    next_segment_seq: int = 1
    next_event_seq: int = 1
    events: list[SessionEvent] = field(default_factory=list)
    ingest_latencies_ms: list[float] = field(default_factory=list)


def annotate_segment(segment: TranscriptSegment, graph: KnowledgeGraph) -> list[TermHighlight]:
    """Term highlights for a final segment; pure, mirrors find_terms exactly."""
    if not segment.final:
        raise StateError("only final segments are annotated")
    return [
        TermHighlight(
            session_id=segment.session_id,
            segment_seq=segment.seq,
            match=m,
            emitted_at=datetime.now(),
        )
        for m in find_terms(segment.text, graph)
    ]


class SessionManager:
    """Owns sessions; ingestion is serialized per session, parallel across."""

    def __init__(
        self,
        graph: KnowledgeGraph,
        participant_exists: Callable[[str], bool] | None = None,
        event_sink: Callable[[SessionEvent], None] | None = None,
    ):
        self.graph = graph
        self._participant_exists = participant_exists
        self._event_sink = event_sink
        self._sessions: dict[str, ConsultationSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._manager_lock = threading.Lock()
        self._counter = 0

    # -- lifecycle -----------------------------------------------------

    def open_session(self, patient_id: str, physician_id: str) -> ConsultationSession:
        for pid in (patient_id, physician_id):
            if self._participant_exists is not None and not self._participant_exists(pid):
                raise NotFoundError(f"unknown participant {pid!r}")
        with self._manager_lock:
            self._counter += 1
            session = ConsultationSession(
                id=f"s-{self._counter:04d}", patient_id=patient_id, physician_id=physician_id
            )
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
        return session

    def get(self, session_id: str) -> ConsultationSession:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise NotFoundError(f"unknown session {session_id!r}") from None

    def sessions_for_patient(self, patient_id: str) -> list[ConsultationSession]:
        return [s for s in self._sessions.values() if s.patient_id == patient_id]

    def close_session(self, session_id: str) -> ConsultationSession:
        session = self.get(session_id)
        with self._locks[session_id]:
            if session.state is not SessionState.LIVE:
                raise StateError(f"session {session_id} is not live")
            session.state = SessionState.CLOSED
            session.closed_at = datetime.now()
        return session

    def close_all_live(self) -> int:
        """Graceful-shutdown hook: auto-close every live session."""
        closed = 0
        for sid, session in list(self._sessions.items()):
            if session.state is SessionState.LIVE:
                self.close_session(sid)
                closed += 1
        return closed

    # -- ingestion -----------------------------------------------------

    def ingest_chunk(self, chunk: AudioChunk, asr: AsrAdapter | None = None) -> list[SessionEvent]:
        asr = asr or TextPayloadAdapter()
        session = self.get(chunk.session_id)
        with self._locks[chunk.session_id]:
            if session.state is not SessionState.LIVE:
                raise StateError(f"session {session.id} is not live")
            if chunk.seq in session.seen_chunk_seqs:
                logger.warning("duplicate chunk seq %s on session %s dropped", chunk.seq, session.id)
                return []
            session.seen_chunk_seqs.add(chunk.seq)

            started = time.perf_counter()
            events: list[SessionEvent] = []
            rel_ms = max(0, int((chunk.captured_at - session.opened_at).total_seconds() * 1000))
            try:
                drafts = asr.transcribe(chunk.payload, chunk.dialect_hint)
            except Exception as exc:
                segment = self._add_segment(
                    session, Speaker.UNKNOWN, "", rel_ms, rel_ms, final=False
                )
                events.append(self._emit(session, "segment", _segment_payload(segment)))
                events.append(
                    self._emit(
                        session,
                        "pipeline_error",
                        {"chunk_seq": chunk.seq, "error": str(exc)},
                    )
                )
                return events

            for draft in drafts:
                segment = self._add_segment(
                    session,
                    Speaker(draft.speaker),
                    draft.text,
                    rel_ms + draft.start_ms,
                    rel_ms + max(draft.start_ms, draft.end_ms),
                    final=draft.final,
                )
                events.append(self._emit(session, "segment", _segment_payload(segment)))
                if segment.final:
                    for highlight in annotate_segment(segment, self.graph):
                        session.highlights.append(highlight)
                        events.append(self._emit(session, "highlight", _highlight_payload(highlight)))
            session.ingest_latencies_ms.append((time.perf_counter() - started) * 1000.0)
            return events

    def _add_segment(self, session, speaker, text, start_ms, end_ms, final) -> TranscriptSegment:
        segment = TranscriptSegment(
            session_id=session.id,
            seq=session.next_segment_seq,
            speaker=speaker,
            text=text,
            start_ms=start_ms,
            end_ms=end_ms,
            final=final,
        )
        session.next_segment_seq += 1
        session.segments.append(segment)
        return segment

    def _emit(self, session, event_type: str, payload: dict) -> SessionEvent:
        event = SessionEvent(
            type=event_type, session_id=session.id, seq=session.next_event_seq, payload=payload
        )
        session.next_event_seq += 1
        session.events.append(event)
        if self._event_sink is not None:
            self._event_sink(event)
        return event

    # -- reads ---------------------------------------------------------

    def session_transcript(self, session_id: str) -> tuple[list[TranscriptSegment], list[str]]:
        """Segments in seq order plus the sidebar: distinct node ids in
        first-mention order, final segments only."""
        session = self.get(session_id)
        segments = sorted(session.segments, key=lambda s: s.seq)
        sidebar: list[str] = []
        seen: set[str] = set()
        for highlight in session.highlights:
            nid = highlight.match.node_id
            if nid not in seen:
                seen.add(nid)
                sidebar.append(nid)
        return segments, sidebar

    def latency_stats_ms(self, session_id: str) -> dict[str, float]:
        lat = self.get(session_id).ingest_latencies_ms
        if not lat:
            return {"count": 0, "p50": 0.0, "p100": 0.0}
        ordered = sorted(lat)
        return {
            "count": len(ordered),
            "p50": ordered[len(ordered) // 2],
            "p100": ordered[-1],
        }


def _segment_payload(segment: TranscriptSegment) -> dict:
    return {
        "seq": segment.seq,
        "speaker": segment.speaker.value,
        "text": segment.text,
        "start_ms": segment.start_ms,
        "end_ms": segment.end_ms,
        "final": segment.final,
    }


def _highlight_payload(highlight: TermHighlight) -> dict:
    return {
        "segment_seq": highlight.segment_seq,
        "node_id": highlight.match.node_id,
        "start": highlight.match.start,
        "end": highlight.match.end,
        "surface": highlight.match.matched_surface,
    }


def parse_chunk_log(lines: Iterable[str]) -> list[tuple[int, int, str]]:
    """Chunk log lines: `seq<TAB>offset_ms<TAB>speaker|text`; # comments."""
    out = []
    for raw in lines:
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        seq_raw, offset_raw, payload = line.split("\t", 2)
        out.append((int(seq_raw), int(offset_raw), payload))
    return out


def replay_chunk_log(
    script: str | Iterable[str],
    graph: KnowledgeGraph,
    asr: AsrAdapter | None = None,
) -> dict:
    """Replay a recorded chunk log through a fresh session.

    Returns the rendered transcript, the sidebar and latency stats. The
    rendering depends only on the log contents, so two replays of the same
    log are byte-identical.
    """
    from datetime import timedelta

    lines = script.splitlines() if isinstance(script, str) else script
    chunks = parse_chunk_log(lines)
    manager = SessionManager(graph)
    session = manager.open_session("demo-patient", "demo-physician")
    for seq, offset_ms, payload in chunks:
        manager.ingest_chunk(
            AudioChunk(
                session_id=session.id,
                seq=seq,
                captured_at=session.opened_at + timedelta(milliseconds=offset_ms),
                payload=payload.encode("utf-8"),
            ),
            asr,
        )
    manager.close_session(session.id)
    segments, sidebar = manager.session_transcript(session.id)
    rendered = "".join(
        f"[{s.start_ms:>7}ms] {s.speaker.value}: {s.text}\n" for s in segments if s.final
    )
    sidebar_names = [graph.nodes[n].canonical_name for n in sidebar if n in graph.nodes]
    rendered += "sidebar: " + ", ".join(sidebar_names) + "\n"
    return {
        "transcript": rendered,
        "sidebar": sidebar,
        "latency": manager.latency_stats_ms(session.id),
        "session": session,
    }

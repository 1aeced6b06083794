from datetime import datetime, timedelta
from pathlib import Path

import pytest

from carebridge.errors import NotFoundError, StateError
from carebridge.knowledge import find_terms
from carebridge.transcripts import (
    AudioChunk,
    SessionManager,
    SessionState,
    Speaker,
    annotate_segment,
    replay_chunk_log,
)
from carebridge.transcripts.asr import FailingAsrAdapter, TextPayloadAdapter

DEMO_LOG = Path(__file__).parent / "data" / "demo_session_50.log"


def make_chunk(session, seq, text, offset_ms=0):
    return AudioChunk(
        session_id=session.id,
        seq=seq,
        captured_at=session.opened_at + timedelta(milliseconds=offset_ms),
        payload=text.encode("utf-8"),
    )


@pytest.fixture
def manager(mini_graph):
    directory = {"p1", "p2", "dr1"}
    return SessionManager(mini_graph, participant_exists=directory.__contains__)


class TestSessionLifecycle:
    def test_open_session(self, manager):
        s = manager.open_session("p1", "dr1")
        assert s.state is SessionState.LIVE
        assert s.segments == []

    def test_unknown_physician(self, manager):
        with pytest.raises(NotFoundError):
            manager.open_session("p1", "who")

    def test_two_opens_are_distinct_sessions(self, manager):
        a = manager.open_session("p1", "dr1")
        b = manager.open_session("p1", "dr1")
        assert a.id != b.id

    def test_close(self, manager):
        s = manager.open_session("p1", "dr1")
        closed = manager.close_session(s.id)
        assert closed.state is SessionState.CLOSED
        assert closed.closed_at is not None

    def test_ingest_after_close_rejected(self, manager):
        s = manager.open_session("p1", "dr1")
        manager.close_session(s.id)
        with pytest.raises(StateError):
            manager.ingest_chunk(make_chunk(s, 1, "patient|hello"))

    def test_double_close_rejected(self, manager):
        s = manager.open_session("p1", "dr1")
        manager.close_session(s.id)
        with pytest.raises(StateError):
            manager.close_session(s.id)


class TestIngest:
    def test_reference_adapter_speaker_routing(self, manager):
        s = manager.open_session("p1", "dr1")
        events = manager.ingest_chunk(make_chunk(s, 1, "patient|my sugar is high"))
        assert [e.type for e in events] == ["segment"]
        assert s.segments[0].speaker is Speaker.PATIENT
        assert s.segments[0].text == "my sugar is high"
        assert s.segments[0].final

    def test_duplicate_seq_dropped_idempotently(self, manager):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "patient|hello"))
        events = manager.ingest_chunk(make_chunk(s, 1, "patient|hello again"))
        assert events == []
        assert len(s.segments) == 1

    def test_term_mention_emits_highlight(self, manager):
        s = manager.open_session("p1", "dr1")
        events = manager.ingest_chunk(make_chunk(s, 1, "physician|start metformin"))
        assert [e.type for e in events] == ["segment", "highlight"]
        assert events[1].payload["node_id"] == "c-metformin"
        # offsets refer to the segment text
        text = s.segments[0].text
        h = events[1].payload
        assert text[h["start"] : h["end"]] == "metformin"

    def test_adapter_failure_produces_error_event(self, manager):
        s = manager.open_session("p1", "dr1")
        events = manager.ingest_chunk(make_chunk(s, 1, "patient|hello"), FailingAsrAdapter())
        assert [e.type for e in events] == ["segment", "pipeline_error"]
        seg = s.segments[0]
        assert seg.speaker is Speaker.UNKNOWN and seg.text == "" and not seg.final

    def test_event_seq_monotone_and_segment_before_highlight(self, manager):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "physician|metformin helps type 2 diabetes"))
        manager.ingest_chunk(make_chunk(s, 2, "patient|thanks"))
        seqs = [e.seq for e in s.events]
        assert seqs == sorted(seqs) and len(set(seqs)) == len(seqs)
        seg_seq = {e.payload.get("seq"): e.seq for e in s.events if e.type == "segment"}
        for e in s.events:
            if e.type == "highlight":
                assert e.seq > seg_seq[e.payload["segment_seq"]]

    def test_spans_relative_to_session_start(self, manager):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "patient|hello", offset_ms=2500))
        assert s.segments[0].start_ms == 2500


class TestAnnotate:
    def test_no_terms(self, manager, mini_graph):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "patient|nothing special today"))
        assert annotate_segment(s.segments[0], mini_graph) == []

    def test_exact_surface_form(self, manager, mini_graph):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "patient|metformin"))
        highlights = annotate_segment(s.segments[0], mini_graph)
        assert len(highlights) == 1

    def test_pure(self, manager, mini_graph):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "patient|take metformin for diabetes"))
        a = annotate_segment(s.segments[0], mini_graph)
        b = annotate_segment(s.segments[0], mini_graph)
        assert [h.match for h in a] == [h.match for h in b]

    def test_non_final_rejected(self, manager, mini_graph):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "patient|x"), FailingAsrAdapter())
        with pytest.raises(StateError):
            annotate_segment(s.segments[0], mini_graph)


class TestTranscriptView:
    def test_empty_session(self, manager):
        s = manager.open_session("p1", "dr1")
        assert manager.session_transcript(s.id) == ([], [])

    def test_sidebar_dedup_first_mention_order(self, manager):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "physician|we treat type 2 diabetes"))
        manager.ingest_chunk(make_chunk(s, 2, "physician|with metformin"))
        manager.ingest_chunk(make_chunk(s, 3, "patient|metformin again?"))
        _, sidebar = manager.session_transcript(s.id)
        assert sidebar == ["c-t2dm", "c-metformin"]

    def test_readable_after_close(self, manager):
        s = manager.open_session("p1", "dr1")
        manager.ingest_chunk(make_chunk(s, 1, "physician|metformin"))
        before = manager.session_transcript(s.id)
        manager.close_session(s.id)
        assert manager.session_transcript(s.id) == before

    def test_unknown_session(self, manager):
        with pytest.raises(NotFoundError):
            manager.session_transcript("nope")

    def test_sidebar_equals_find_terms_union(self, manager, mini_graph):
        s = manager.open_session("p1", "dr1")
        texts = [
            "physician|metformin treats type 2 diabetes",
            "patient|is diabetes forever?",
            "physician|glucophage is the same metformin",
        ]
        for i, t in enumerate(texts, start=1):
            manager.ingest_chunk(make_chunk(s, i, t))
        _, sidebar = manager.session_transcript(s.id)
        expected = set()
        for seg in s.segments:
            expected |= {m.node_id for m in find_terms(seg.text, mini_graph)}
        assert set(sidebar) == expected


class TestReplay:
    def test_replay_deterministic(self, big_graph):
        script = DEMO_LOG.read_text("utf-8")
        a = replay_chunk_log(script, big_graph)
        b = replay_chunk_log(script, big_graph)
        assert a["transcript"] == b["transcript"]
        assert a["sidebar"] == b["sidebar"]

    def test_replay_latency_under_budget(self, big_graph):
        out = replay_chunk_log(DEMO_LOG.read_text("utf-8"), big_graph)
        assert out["latency"]["count"] == 50
        assert out["latency"]["p100"] < 1400

    def test_replay_has_expected_terms(self, big_graph):
        out = replay_chunk_log(DEMO_LOG.read_text("utf-8"), big_graph)
        names = {big_graph.nodes[n].canonical_name for n in out["sidebar"]}
        assert "metformin" in names
        assert "glycated hemoglobin" in names

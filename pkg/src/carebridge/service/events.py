"""Ordered event streams with resume-by-sequence.

Each stream is an append-only list of frames with a strictly monotone
seq. Subscribers resume after a disconnect by passing the last seq they
saw; reading from the log again is gapless and duplicate-free by
construction.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class EventFrame:
    type: str  # segment | highlight | pipeline_error | alert | prompt | reminder
    stream: str
    seq: int
    payload: dict[str, Any]

    def as_wire(self) -> dict[str, Any]:
        doc = {"type": self.type, "seq": self.seq, "payload": self.payload}
        kind, _, ident = self.stream.partition("/")
        if kind == "session":
            doc["session"] = ident
        else:
            doc["patient"] = ident
        return doc


class EventLog:
    def __init__(self):
        self._streams: dict[str, list[EventFrame]] = {}
        self._lock = threading.Lock()

    def append(self, stream: str, type: str, payload: dict, seq: int | None = None) -> EventFrame:
        with self._lock:
            frames = self._streams.setdefault(stream, [])
            last = frames[-1].seq if frames else 0
            if seq is None:
                seq = last + 1
            elif seq <= last:
                raise ValueError(f"seq {seq} not monotone on stream {stream} (last {last})")
            frame = EventFrame(type=type, stream=stream, seq=seq, payload=dict(payload))
            frames.append(frame)
            return frame

    def read_from(self, stream: str, after_seq: int = 0) -> list[EventFrame]:
        with self._lock:
            return [f for f in self._streams.get(stream, []) if f.seq > after_seq]

    def last_seq(self, stream: str) -> int:
        with self._lock:
            frames = self._streams.get(stream, [])
            return frames[-1].seq if frames else 0

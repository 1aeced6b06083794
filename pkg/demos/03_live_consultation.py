"""Streaming consultation: chunk ingestion, live highlights, the sidebar.

Run: python3 demos/03_live_consultation.py
"""

from pathlib import Path

from carebridge.knowledge import fixture_graph
from carebridge.transcripts import replay_chunk_log

graph = fixture_graph()
script = (Path(__file__).parents[1] / "tests" / "data" / "demo_session_50.log").read_text("utf-8")

out = replay_chunk_log(script, graph)
lines = out["transcript"].splitlines()
print("\n".join(lines[:12]))
print(f"... ({len(lines) - 12} more lines)")
print(lines[-1])  # the sidebar line

latency = out["latency"]
print(f"\nchunk->highlight latency over {latency['count']} chunks: "
      f"p50 {latency['p50']:.2f} ms, worst {latency['p100']:.2f} ms (budget 1400 ms)")

again = replay_chunk_log(script, graph)
print(f"replay deterministic: {again['transcript'] == out['transcript']}")

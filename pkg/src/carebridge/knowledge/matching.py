"""Surface-form recognition in free text.

Matching runs over NFKC + case-folded text via an Aho-Corasick automaton,
then keeps the leftmost-longest non-overlapping candidates. Reported spans
always index the original (unnormalized) text.
"""

from __future__ import annotations

import unicodedata
from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .graph import KnowledgeGraph


def fold_text(text: str) -> str:
    """NFKC + casefold, applied per character so offsets stay mappable."""
    return "".join(unicodedata.normalize("NFKC", ch).casefold() for ch in text)


def _fold_with_map(text: str) -> tuple[str, list[int]]:
    # origin[i] = index in the original text of the char that produced norm[i]
    parts: list[str] = []
    origin: list[int] = []
    for i, ch in enumerate(text):
        folded = unicodedata.normalize("NFKC", ch).casefold()
        parts.append(folded)
        origin.extend([i] * len(folded))
    return "".join(parts), origin


@dataclass(frozen=True)
class TermMatch:
    node_id: str
    start: int
    end: int  # half-open offsets into the original text
    matched_surface: str  # the normalized surface form that hit


class _Automaton:
    """Classic Aho-Corasick over normalized surface forms."""

    def __init__(self, patterns: dict[str, str]):
        # patterns: normalized surface -> node id
        self.goto: list[dict[str, int]] = [{}]
        self.out: list[str | None] = [None]  # pattern ending at this state
        self.fail = [0]
        self.olink = [0]  # nearest fail ancestor with output, 0 = none
        for pattern in patterns:
            self._insert(pattern)
        self._build_links()
        self.node_for = patterns

    def _insert(self, pattern: str):
        state = 0
        for ch in pattern:
            nxt = self.goto[state].get(ch)
            if nxt is None:
                nxt = len(self.goto)
                self.goto.append({})
                self.out.append(None)
                self.fail.append(0)
                self.olink.append(0)
                self.goto[state][ch] = nxt
            state = nxt
        self.out[state] = pattern

    def _build_links(self):
        queue = deque()
        for state in self.goto[0].values():
            queue.append(state)
        while queue:
            state = queue.popleft()
            for ch, nxt in self.goto[state].items():
                queue.append(nxt)
                f = self.fail[state]
                while f and ch not in self.goto[f]:
                    f = self.fail[f]
                self.fail[nxt] = self.goto[f].get(ch, 0)
                self.olink[nxt] = (
                    self.fail[nxt] if self.out[self.fail[nxt]] else self.olink[self.fail[nxt]]
                )

    def scan(self, text: str):
        """Yield every (start, end, pattern) occurrence, including nested ones."""
        state = 0
        for j, ch in enumerate(text):
            while state and ch not in self.goto[state]:
                state = self.fail[state]
            state = self.goto[state].get(ch, 0)
            t = state
            while t:
                pattern = self.out[t]
                if pattern:
                    yield j + 1 - len(pattern), j + 1, pattern
                t = self.olink[t]


class SurfaceMatcher:
    """Compiled matcher over a graph's surface forms."""

    def __init__(self, surface_to_node: dict[str, str]):
        self._automaton = _Automaton(surface_to_node)

    @classmethod
    def from_graph(cls, graph: "KnowledgeGraph") -> "SurfaceMatcher":
        surface_to_node: dict[str, str] = {}
        for node in graph.nodes.values():
            for surface in node.surface_forms:
                key = fold_text(surface)
                if not key:
                    continue
                # shared surface forms resolve to the smallest node id
                prev = surface_to_node.get(key)
                if prev is None or node.id < prev:
                    surface_to_node[key] = node.id
        return cls(surface_to_node)

    def find(self, text: str) -> list[TermMatch]:
        if not text:
            return []
        norm, origin = _fold_with_map(text)
        n = len(norm)
        candidates: list[tuple[int, int, str]] = []
        for a, b, pattern in self._automaton.scan(norm):
            # a match must cover whole original characters on both ends
            if a > 0 and origin[a] == origin[a - 1]:
                continue
            if b < n and origin[b] == origin[b - 1]:
                continue
            candidates.append((a, b, pattern))

        candidates.sort(key=lambda c: (c[0], -(c[1] - c[0])))
        matches: list[TermMatch] = []
        cursor = 0  # next admissible start, in normalized coordinates
        for a, b, pattern in candidates:
            if a < cursor:
                continue
            start = origin[a]
            end = origin[b - 1] + 1
            matches.append(
                TermMatch(
                    node_id=self._automaton.node_for[pattern],
                    start=start,
                    end=end,
                    matched_surface=pattern,
                )
            )
            cursor = b
        return matches


def find_terms(text: str, graph: "KnowledgeGraph") -> list[TermMatch]:
    """Leftmost-longest, non-overlapping term mentions, sorted by start offset."""
    return graph.matcher().find(text)

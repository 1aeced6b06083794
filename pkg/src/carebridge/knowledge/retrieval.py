"""Hybrid retrieval: graph-neighborhood lookup fused with cosine search.

The two routes produce ranked doc-id lists which are combined by
reciprocal rank fusion: fused(doc) = sum over lists containing doc of
1 / (rrf_k + rank), with rank starting at 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from ..errors import ValidationError
from .embedding import embed
from .graph import KnowledgeGraph, hop_distances
from .matching import find_terms


class ResultSource(str, Enum):
    GRAPH = "graph"
    VECTOR = "vector"
    FUSED = "fused"


@dataclass(frozen=True)
class RankedResult:
    doc_id: str
    score: float
    source: ResultSource

    def __post_init__(self):
        if self.score < 0:
            raise ValidationError("result score must be >= 0")


class VectorIndex:
    """Exact cosine index over document embeddings (desk scale, no ANN)."""

    def __init__(self):
        self._vectors: dict[str, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self._vectors)

    def doc_ids(self) -> list[str]:
        return sorted(self._vectors)

    def add(self, doc_id: str, vector: np.ndarray) -> None:
        self._vectors[doc_id] = np.asarray(vector, dtype=np.float64)

    def add_text(self, doc_id: str, text: str) -> None:
        self.add(doc_id, embed(text))

    @classmethod
    def from_graph(cls, graph: KnowledgeGraph) -> "VectorIndex":
        """Index every node's lay explanation under its node id."""
        index = cls()
        for node in graph.nodes.values():
            index.add_text(node.id, f"{node.canonical_name} {node.lay_explanation}")
        return index

    def search(self, query_vector: np.ndarray, k: int) -> list[RankedResult]:
        return vector_search(query_vector, self, k)


def vector_search(query_vector: np.ndarray, index: VectorIndex, k: int) -> list[RankedResult]:
    """Top-k documents by cosine similarity, ties broken by doc id ascending."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    if len(index) == 0:
        return []
    query = np.asarray(query_vector, dtype=np.float64)
    scored = []
    for doc_id, vec in index._vectors.items():
        # stored vectors are unit or zero, so the dot product is the cosine
        scored.append((float(np.dot(query, vec)), doc_id))
    scored.sort(key=lambda s: (-s[0], s[1]))
    return [
        RankedResult(doc_id=doc_id, score=max(score, 0.0), source=ResultSource.VECTOR)
        for score, doc_id in scored[:k]
    ]


def rrf_fuse(
    lists: Sequence[Sequence[str]],
    rrf_k: int = 60,
) -> list[tuple[str, float]]:
    """Fuse ranked doc-id lists; returns (doc_id, score) by score desc, id asc."""
    scores: dict[str, float] = {}
    for ranked in lists:
        for rank, doc_id in enumerate(ranked, start=1):
            scores[doc_id] = scores.get(doc_id, 0.0) + 1.0 / (rrf_k + rank)
    return sorted(scores.items(), key=lambda item: (-item[1], item[0]))


def graph_route(query_text: str, graph: KnowledgeGraph) -> list[str]:
    """Doc ids from the term-match route: matched nodes plus depth-1 neighbors.

    Ranked by (hop distance ascending, node id ascending) so fusion input
    is deterministic.
    """
    seeds = {m.node_id for m in find_terms(query_text, graph)}
    if not seeds:
        return []
    dist = hop_distances(seeds, graph, depth=1)
    return [nid for nid in sorted(dist, key=lambda n: (dist[n], n))]


def hybrid_retrieve(
    query_text: str,
    graph: KnowledgeGraph,
    index: VectorIndex,
    k: int,
    rrf_k: int = 60,
) -> list[RankedResult]:
    """Fused top-k over the graph route and the vector route."""
    list_a = graph_route(query_text, graph)
    list_b = [r.doc_id for r in vector_search(embed(query_text), index, k)] if len(index) else []
    fused = rrf_fuse([list_a, list_b], rrf_k=rrf_k)
    return [
        RankedResult(doc_id=doc_id, score=score, source=ResultSource.FUSED)
        for doc_id, score in fused[:k]
    ]


def threshold_filter(results: Iterable[RankedResult], min_score: float) -> list[RankedResult]:
    """Keep results scoring at least min_score, order preserved. Idempotent."""
    return [r for r in results if r.score >= min_score]

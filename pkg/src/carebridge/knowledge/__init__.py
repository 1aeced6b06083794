from .graph import (
    Category,
    KnowledgeGraph,
    Relation,
    TermEdge,
    TermNode,
    explain_term,
    load_graph,
    neighborhood,
)
from .matching import TermMatch, find_terms, fold_text
from .embedding import DIM, embed
from .retrieval import (
    RankedResult,
    VectorIndex,
    hybrid_retrieve,
    rrf_fuse,
    threshold_filter,
    vector_search,
)
from .review import GraphStore, ProposedUpdate
from .fixture import fixture_graph, generate_fixture_document

__all__ = [
    "Category",
    "KnowledgeGraph",
    "Relation",
    "TermEdge",
    "TermNode",
    "explain_term",
    "load_graph",
    "neighborhood",
    "TermMatch",
    "find_terms",
    "fold_text",
    "DIM",
    "embed",
    "RankedResult",
    "VectorIndex",
    "hybrid_retrieve",
    "rrf_fuse",
    "threshold_filter",
    "vector_search",
    "GraphStore",
    "ProposedUpdate",
    "fixture_graph",
    "generate_fixture_document",
]

"""Medical terminology graph: typed term nodes connected by typed relations.

The graph is an immutable snapshot. Loading compiles the surface-form
matcher once; updates go through the review queue and produce a new
snapshot with a bumped version (see review.py).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterable

from ..errors import DuplicateError, NotFoundError, ParseError, ValidationError


class Category(str, Enum):
    CONDITION = "condition"
    DRUG = "drug"
    SYMPTOM = "symptom"
    PROCEDURE = "procedure"
    LIFESTYLE = "lifestyle"
    METRIC = "metric"


class Relation(str, Enum):
    TREATS = "treats"
    SYMPTOM_OF = "symptom_of"
    SUBTYPE_OF = "subtype_of"
    MEASURES = "measures"
    CONTRAINDICATED_WITH = "contraindicated_with"
    RELATED_TO = "related_to"


@dataclass(frozen=True)
class TermNode:
    id: str
    canonical_name: str
    surface_forms: tuple[str, ...]
    lay_explanation: str
    category: Category
    disambiguation_cues: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.id:
            raise ValidationError("node id must be non-empty")
        if not self.surface_forms:
            raise ValidationError(f"node {self.id}: surface_forms must be non-empty")
        if self.canonical_name not in self.surface_forms:
            raise ValidationError(f"node {self.id}: canonical name missing from surface forms")
        if not self.lay_explanation:
            raise ValidationError(f"node {self.id}: lay explanation must be non-empty")


@dataclass(frozen=True)
class TermEdge:
    src: str
    relation: Relation
    dst: str
    note: str | None = None

    def __post_init__(self):
        if self.src == self.dst:
            raise ValidationError(f"self-loop on {self.src}")


@dataclass
class KnowledgeGraph:
    nodes: dict[str, TermNode]
    edges: list[TermEdge]
    version: int = 1
    # compiled surface-form matcher, built lazily; not part of value equality
    _matcher: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        for e in self.edges:
            if e.src not in self.nodes or e.dst not in self.nodes:
                missing = e.src if e.src not in self.nodes else e.dst
                raise ValidationError(f"edge endpoint {missing!r} not in graph")

    def node(self, node_id: str) -> TermNode:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise NotFoundError(f"unknown node id {node_id!r}") from None

    def incident_edges(self, node_id: str) -> list[TermEdge]:
        return [e for e in self.edges if e.src == node_id or e.dst == node_id]

    def matcher(self):
        if self._matcher is None:
            from .matching import SurfaceMatcher

            self._matcher = SurfaceMatcher.from_graph(self)
        return self._matcher


def _parse_node_line(fields: list[str], lineno: int) -> TermNode:
    # N <TAB> id <TAB> canonical <TAB> surf1|surf2|... <TAB> category <TAB> explanation [<TAB> cue1|cue2]
    if len(fields) not in (6, 7):
        raise ParseError(f"node line needs 6 fields, got {len(fields)}", lineno)
    _, node_id, canonical, surfaces_raw, category_raw, explanation = fields[:6]
    cues = tuple(c for c in fields[6].split("|") if c) if len(fields) == 7 else ()
    try:
        category = Category(category_raw)
    except ValueError:
        raise ParseError(f"unknown category {category_raw!r}", lineno) from None
    surfaces = [s for s in surfaces_raw.split("|") if s]
    if canonical not in surfaces:
        surfaces.insert(0, canonical)
    try:
        return TermNode(
            id=node_id,
            canonical_name=canonical,
            surface_forms=tuple(surfaces),
            lay_explanation=explanation,
            category=category,
            disambiguation_cues=cues,
        )
    except ValidationError as exc:
        raise ParseError(str(exc), lineno) from None


def _parse_edge_line(fields: list[str], lineno: int) -> TermEdge:
    if len(fields) != 4:
        raise ParseError(f"edge line needs 4 fields, got {len(fields)}", lineno)
    _, src, relation_raw, dst = fields
    try:
        relation = Relation(relation_raw)
    except ValueError:
        raise ParseError(f"unknown relation {relation_raw!r}", lineno) from None
    try:
        return TermEdge(src=src, relation=relation, dst=dst)
    except ValidationError as exc:
        raise ParseError(str(exc), lineno) from None


def load_graph(document: IO[str] | Iterable[str] | str) -> KnowledgeGraph:
    """Parse a line-delimited graph document into a validated snapshot.

    Node lines start with N, edge lines with E, `#` starts a comment.
    Raises ParseError (with line number), DuplicateError or ValidationError.
    """
    if isinstance(document, str):
        lines = document.splitlines()
    else:
        lines = (line.rstrip("\n") for line in document)

    nodes: dict[str, TermNode] = {}
    edges: list[TermEdge] = []
    edge_lines: list[tuple[TermEdge, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        kind = fields[0]
        if kind == "N":
            node = _parse_node_line(fields, lineno)
            if node.id in nodes:
                raise DuplicateError(f"line {lineno}: duplicate node id {node.id!r}")
            nodes[node.id] = node
        elif kind == "E":
            edge_lines.append((_parse_edge_line(fields, lineno), lineno))
        else:
            raise ParseError(f"unknown record kind {kind!r}", lineno)

    for edge, lineno in edge_lines:
        for endpoint in (edge.src, edge.dst):
            if endpoint not in nodes:
                raise ParseError(f"edge references unknown node id {endpoint!r}", lineno)
        edges.append(edge)

    graph = KnowledgeGraph(nodes=nodes, edges=edges, version=1)
    graph.matcher()  # compile the automaton eagerly
    return graph


def dump_graph(graph: KnowledgeGraph) -> str:
    """Serialize a graph back into the line-delimited document format."""
    out = []
    for node in graph.nodes.values():
        fields = [
            "N",
            node.id,
            node.canonical_name,
            "|".join(node.surface_forms),
            node.category.value,
            node.lay_explanation,
        ]
        if node.disambiguation_cues:
            fields.append("|".join(node.disambiguation_cues))
        out.append("\t".join(fields))
    for e in graph.edges:
        out.append("\t".join(["E", e.src, e.relation.value, e.dst]))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class TermExplanation:
    canonical_name: str
    lay_explanation: str
    disambiguation_cues: tuple[str, ...]
    related: tuple[tuple[Relation, str], ...]


def explain_term(node_id: str, graph: KnowledgeGraph) -> TermExplanation:
    """Lay explanation plus every incident edge, for the sidebar detail view."""
    node = graph.node(node_id)
    related = []
    for e in graph.incident_edges(node_id):
        other = e.dst if e.src == node_id else e.src
        related.append((e.relation, other))
    return TermExplanation(
        canonical_name=node.canonical_name,
        lay_explanation=node.lay_explanation,
        disambiguation_cues=node.disambiguation_cues,
        related=tuple(related),
    )


def neighborhood(
    node_id: str,
    relations: Iterable[Relation] | None,
    depth: int,
    graph: KnowledgeGraph,
) -> KnowledgeGraph:
    """Subgraph of nodes reachable from the seed within `depth` hops.

    Edges are traversed in both directions; `relations` filters which edge
    types may be crossed (None means all). The seed is always included.
    """
    graph.node(node_id)
    if depth < 1:
        raise ValidationError("depth must be >= 1")
    allowed = set(relations) if relations is not None else set(Relation)

    adjacency: dict[str, set[str]] = {}
    for e in graph.edges:
        if e.relation in allowed:
            adjacency.setdefault(e.src, set()).add(e.dst)
            adjacency.setdefault(e.dst, set()).add(e.src)

    seen = {node_id}
    frontier = {node_id}
    for _ in range(depth):
        nxt = set()
        for nid in frontier:
            nxt |= adjacency.get(nid, set()) - seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt

    sub_nodes = {nid: graph.nodes[nid] for nid in seen}
    sub_edges = [
        e for e in graph.edges if e.relation in allowed and e.src in seen and e.dst in seen
    ]
    return KnowledgeGraph(nodes=sub_nodes, edges=sub_edges, version=graph.version)


def hop_distances(
    seeds: Iterable[str],
    graph: KnowledgeGraph,
    depth: int,
    relations: Iterable[Relation] | None = None,
) -> dict[str, int]:
    """Minimum hop count from any seed, capped at `depth`; used for ranking."""
    allowed = set(relations) if relations is not None else set(Relation)
    adjacency: dict[str, set[str]] = {}
    for e in graph.edges:
        if e.relation in allowed:
            adjacency.setdefault(e.src, set()).add(e.dst)
            adjacency.setdefault(e.dst, set()).add(e.src)

    dist = {s: 0 for s in seeds if s in graph.nodes}
    frontier = set(dist)
    for hop in range(1, depth + 1):
        nxt = set()
        for nid in frontier:
            for other in adjacency.get(nid, ()):
                if other not in dist:
                    dist[other] = hop
                    nxt.add(other)
        frontier = nxt
        if not frontier:
            break
    return dist

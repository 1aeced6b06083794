"""Review queue for graph updates.

Feedback-driven changes never mutate the live graph. Proposals sit in a
pending queue until approved; approval builds a new snapshot with the
version bumped and atomically swaps it in. Readers keep whatever snapshot
they already hold.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..errors import DuplicateError, NotFoundError, ValidationError
from .graph import Category, KnowledgeGraph, Relation, TermEdge, TermNode


class UpdateKind(str, Enum):
    NEW_TERM = "new_term"
    NEW_ALIAS = "new_alias"
    NEW_EDGE = "new_edge"


class UpdateStatus(str, Enum):
    PENDING = "pending"
    APPROVED = "approved"
    REJECTED = "rejected"


_REQUIRED_FIELDS = {
    UpdateKind.NEW_TERM: {"id", "canonical_name", "category", "lay_explanation"},
    UpdateKind.NEW_ALIAS: {"node_id", "alias"},
    UpdateKind.NEW_EDGE: {"src", "relation", "dst"},
}


@dataclass
class ProposedUpdate:
    id: int
    kind: UpdateKind
    payload: dict[str, Any]
    status: UpdateStatus = UpdateStatus.PENDING
    note: str = ""
    resolution: str = ""


def _validate_payload(kind: UpdateKind, payload: dict[str, Any]) -> None:
    missing = _REQUIRED_FIELDS[kind] - set(payload)
    if missing:
        raise ValidationError(f"{kind.value} payload missing fields: {sorted(missing)}")
    if kind is UpdateKind.NEW_TERM:
        Category(payload["category"])  # raises ValueError on junk
    if kind is UpdateKind.NEW_EDGE:
        Relation(payload["relation"])


class GraphStore:
    """Holds versioned graph snapshots plus the pending-update queue.

    Single writer (the queue), many concurrent readers: `current()` hands
    out the latest immutable snapshot.
    """

    def __init__(self, graph: KnowledgeGraph):
        self._lock = threading.Lock()
        self._snapshots: dict[int, KnowledgeGraph] = {graph.version: graph}
        self._current_version = graph.version
        self._queue: dict[int, ProposedUpdate] = {}
        self._ids = itertools.count(1)

    def current(self) -> KnowledgeGraph:
        with self._lock:
            return self._snapshots[self._current_version]

    def snapshot(self, version: int) -> KnowledgeGraph:
        with self._lock:
            try:
                return self._snapshots[version]
            except KeyError:
                raise NotFoundError(f"no graph snapshot with version {version}") from None

    def pending(self) -> list[ProposedUpdate]:
        with self._lock:
            return [p for p in self._queue.values() if p.status is UpdateStatus.PENDING]

    def propose_update(
        self, kind: UpdateKind | str, payload: dict[str, Any], note: str = ""
    ) -> ProposedUpdate:
        """Queue a candidate change; the live graph stays untouched."""
        kind = UpdateKind(kind)
        try:
            _validate_payload(kind, payload)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
        with self._lock:
            record = ProposedUpdate(id=next(self._ids), kind=kind, payload=dict(payload), note=note)
            self._queue[record.id] = record
            return record

    def reject(self, update_id: int, reason: str = "") -> ProposedUpdate:
        with self._lock:
            record = self._get_pending(update_id)
            record.status = UpdateStatus.REJECTED
            record.resolution = reason
            return record

    def approve(self, update_id: int) -> KnowledgeGraph:
        """Apply a pending update, producing and installing version + 1.

        Referential problems (unknown endpoints, duplicate ids) surface
        here, not at proposal time.
        """
        with self._lock:
            record = self._get_pending(update_id)
            base = self._snapshots[self._current_version]
            try:
                graph = self._apply(base, record)
            except (ValidationError, DuplicateError, NotFoundError) as exc:
                record.status = UpdateStatus.REJECTED
                record.resolution = str(exc)
                raise
            record.status = UpdateStatus.APPROVED
            self._snapshots[graph.version] = graph
            self._current_version = graph.version
            return graph

    def _get_pending(self, update_id: int) -> ProposedUpdate:
        record = self._queue.get(update_id)
        if record is None:
            raise NotFoundError(f"no proposed update {update_id}")
        if record.status is not UpdateStatus.PENDING:
            raise ValidationError(f"update {update_id} already {record.status.value}")
        return record

    @staticmethod
    def _apply(base: KnowledgeGraph, record: ProposedUpdate) -> KnowledgeGraph:
        nodes = dict(base.nodes)
        edges = list(base.edges)
        payload = record.payload
        if record.kind is UpdateKind.NEW_TERM:
            node_id = payload["id"]
            if node_id in nodes:
                raise DuplicateError(f"node id {node_id!r} already exists")
            surfaces = list(payload.get("surface_forms", []))
            if payload["canonical_name"] not in surfaces:
                surfaces.insert(0, payload["canonical_name"])
            nodes[node_id] = TermNode(
                id=node_id,
                canonical_name=payload["canonical_name"],
                surface_forms=tuple(surfaces),
                lay_explanation=payload["lay_explanation"],
                category=Category(payload["category"]),
                disambiguation_cues=tuple(payload.get("disambiguation_cues", ())),
            )
        elif record.kind is UpdateKind.NEW_ALIAS:
            node = nodes.get(payload["node_id"])
            if node is None:
                raise NotFoundError(f"unknown node id {payload['node_id']!r}")
            alias = payload["alias"]
            if not alias:
                raise ValidationError("alias must be non-empty")
            if alias not in node.surface_forms:
                nodes[node.id] = TermNode(
                    id=node.id,
                    canonical_name=node.canonical_name,
                    surface_forms=node.surface_forms + (alias,),
                    lay_explanation=payload.get("lay_explanation", node.lay_explanation),
                    category=node.category,
                    disambiguation_cues=node.disambiguation_cues,
                )
        else:  # NEW_EDGE
            for endpoint in (payload["src"], payload["dst"]):
                if endpoint not in nodes:
                    raise NotFoundError(f"edge endpoint {endpoint!r} not in graph")
            edges.append(
                TermEdge(src=payload["src"], relation=Relation(payload["relation"]), dst=payload["dst"])
            )
        graph = KnowledgeGraph(nodes=nodes, edges=edges, version=base.version + 1)
        graph.matcher()
        return graph

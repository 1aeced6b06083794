"""Interaction-data aggregation: the feedback loop into the term graph.

Questions are normalized (rewrite suffix stripped, case-folded,
punctuation removed) before counting so rephrasings collapse; terms whose
explanations keep being re-requested become review-queue proposals asking
for a plainer lay explanation.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime
from typing import Sequence

from ..knowledge.review import GraphStore, ProposedUpdate
from .analytics import Period

_REWRITE_SUFFIX = re.compile(r"\s*\(context: [^)]*\)\s*$")
_PUNCT = re.compile(r"[^\w\s]", re.UNICODE)


def question_normal_form(text: str) -> str:
    text = _REWRITE_SUFFIX.sub("", text)
    text = _PUNCT.sub("", text.casefold())
    return " ".join(text.split())


@dataclass(frozen=True)
class InteractionEvent:
    at: datetime
    patient_id: str
    kind: str  # question | explain_request | dialect_issue
    text: str = ""  # the question, for kind=question
    node_id: str = ""  # the term, for kind=explain_request


@dataclass
class FeedbackAggregate:
    period: Period
    top_questions: list[tuple[str, int]] = field(default_factory=list)
    misunderstood_terms: list[str] = field(default_factory=list)
    dialect_issue_count: int = 0


def aggregate_feedback(
    interaction_log: Sequence[InteractionEvent],
    period: Period,
    threshold: int = 3,
    graph_store: GraphStore | None = None,
) -> tuple[FeedbackAggregate, list[ProposedUpdate]]:
    """Aggregate one period of interactions; optionally queue proposals.

    A term is "misunderstood" once its explanation was requested at least
    `threshold` times in the period; each such term yields exactly one
    proposal (kind new_alias, asking for a lay rewrite).
    """
    in_period = [e for e in interaction_log if period.contains(e.at)]

    question_counts = Counter(
        question_normal_form(e.text) for e in in_period if e.kind == "question" and e.text
    )
    top_questions = sorted(question_counts.items(), key=lambda kv: (-kv[1], kv[0]))

    explain_counts = Counter(
        e.node_id for e in in_period if e.kind == "explain_request" and e.node_id
    )
    misunderstood = sorted(
        [node for node, count in explain_counts.items() if count >= threshold]
    )
    dialect_issues = sum(1 for e in in_period if e.kind == "dialect_issue")

    aggregate = FeedbackAggregate(
        period=period,
        top_questions=top_questions,
        misunderstood_terms=misunderstood,
        dialect_issue_count=dialect_issues,
    )

    proposals: list[ProposedUpdate] = []
    if graph_store is not None:
        graph = graph_store.current()
        for node_id in misunderstood:
            if node_id not in graph.nodes:
                continue
            node = graph.nodes[node_id]
            proposals.append(
                graph_store.propose_update(
                    "new_alias",
                    {"node_id": node_id, "alias": node.canonical_name},
                    note=(
                        f"explanation re-requested {explain_counts[node_id]} times in "
                        f"{period.label}; consider a plainer lay explanation"
                    ),
                )
            )
    return aggregate, proposals

"""Question answering over the term graph and vector index.

Pipeline: rewrite the question with personal context, retrieve through the
hybrid route, drop weak results at the score threshold, then either answer
with citations or ask the patient for the missing information. Generic
answers without grounding are exactly what physicians complained about,
so an answer is never produced without surviving citations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..errors import ValidationError
from ..knowledge.graph import KnowledgeGraph
from ..knowledge.retrieval import VectorIndex, hybrid_retrieve, threshold_filter
from .generator import (
    GenerationError,
    GenerationRequest,
    TemplateGenerator,
    TextGenerator,
    bounded_generate,
)


class EducationLevel(str, Enum):
    BASIC = "basic"
    INTERMEDIATE = "intermediate"
    ADVANCED = "advanced"


@dataclass(frozen=True)
class GlucoseSummary:
    mean: float
    latest: float
    unit: str = "mmol/L"

    def __post_init__(self):
        if self.unit != "mmol/L":
            raise ValidationError("glucose summaries are fixed to mmol/L")


@dataclass(frozen=True)
class PatientContext:
    patient_id: str
    education_level: EducationLevel = EducationLevel.INTERMEDIATE
    dialect_tag: str | None = None
    medications: tuple[str, ...] = ()
    recent_glucose: GlucoseSummary | None = None


class ResponseKind(str, Enum):
    ANSWER = "answer"
    CLARIFICATION_REQUEST = "clarification_request"


@dataclass(frozen=True)
class QAResponse:
    kind: ResponseKind
    text: str
    citations: tuple[str, ...] = ()
    retrieval_score: float = 0.0

    def __post_init__(self):
        if self.kind is ResponseKind.ANSWER and not self.citations:
            raise ValidationError("answers must carry citations")
        if self.kind is ResponseKind.CLARIFICATION_REQUEST and "?" not in self.text:
            raise ValidationError("clarification requests must ask a question")


_CONDITION_TERM = "type 2 diabetes"

# question categories that need patient-specific data before answering:
# (keywords, context predicate, what to ask for)
_PERSONAL_DATA_RULES = (
    (
        ("blood sugar", "glucose", "reading", "血糖"),
        lambda ctx: ctx is not None and ctx.recent_glucose is not None,
        "your recent blood sugar readings",
    ),
    (
        ("medication", "medicine", "drug", "dose", "pill", "药"),
        lambda ctx: ctx is not None and bool(ctx.medications),
        "which medications you are taking",
    ),
    (
        ("follow up", "follow-up", "when should", "appointment", "复诊"),
        lambda ctx: ctx is not None and ctx.recent_glucose is not None,
        "your recent blood sugar readings",
    ),
)


def _context_terms(context: PatientContext | None) -> list[str]:
    if context is None:
        return []
    terms = list(context.medications)
    if terms or context.recent_glucose is not None:
        terms.append(_CONDITION_TERM)
    return terms


def rewrite_question(question: str, context: PatientContext | None) -> str:
    """Append context terms missing from the question. Idempotent."""
    folded = question.casefold()
    missing = [t for t in _context_terms(context) if t.casefold() not in folded]
    if not missing:
        return question
    return f"{question} (context: {', '.join(missing)})"


def _missing_personal_data(question: str, context: PatientContext | None) -> str | None:
    folded = question.casefold()
    for keywords, have, ask_for in _PERSONAL_DATA_RULES:
        if any(k in folded for k in keywords) and not have(context):
            return ask_for
    return None


def answer_question(
    question: str,
    context: PatientContext | None,
    graph: KnowledgeGraph,
    index: VectorIndex,
    generator: TextGenerator | None = None,
    min_score: float = 0.01,
    retrieve_k: int = 5,
    timeout_s: float | None = None,
) -> QAResponse:
    generator = generator or TemplateGenerator()
    rewritten = rewrite_question(question, context)
    results = threshold_filter(hybrid_retrieve(rewritten, graph, index, retrieve_k), min_score)

    missing = _missing_personal_data(question, context)
    if missing is not None:
        return QAResponse(
            kind=ResponseKind.CLARIFICATION_REQUEST,
            text=f"To answer that for you specifically, could you share {missing}?",
            retrieval_score=results[0].score if results else 0.0,
        )
    if not results:
        return QAResponse(
            kind=ResponseKind.CLARIFICATION_REQUEST,
            text="I could not find enough to answer that reliably. Could you describe your question in more detail?",
        )

    citations = tuple(r.doc_id for r in results)
    explanations = [graph.nodes[d].lay_explanation for d in citations if d in graph.nodes]
    request = GenerationRequest(
        instruction="qa_answer",
        slots={
            "question": question,
            "context_terms": _context_terms(context),
            "explanations": explanations,
        },
    )
    try:
        text = bounded_generate(generator, request, timeout_s).text
    except GenerationError:
        # degrade to the retrieved explanations verbatim; citations survive
        text = "Here is what your care library says: " + " ".join(explanations)
    if not text:
        text = "Here is what your care library says: " + " ".join(explanations)
    return QAResponse(
        kind=ResponseKind.ANSWER,
        text=text,
        citations=citations,
        retrieval_score=results[0].score,
    )

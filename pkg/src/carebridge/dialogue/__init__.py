from .bank import AnswerKey, QuestionBank, QuestionItem, Topic, fixture_bank, load_bank
from .assessment import AssessmentState, knowledge_gaps, next_question, record_response, start_assessment
from .generator import GenerationRequest, GenerationResponse, TemplateGenerator, bounded_generate
from .summary import AssessmentSummary, summarize_assessment
from .qa import GlucoseSummary, PatientContext, QAResponse, answer_question, rewrite_question

__all__ = [
    "AnswerKey",
    "QuestionBank",
    "QuestionItem",
    "Topic",
    "fixture_bank",
    "load_bank",
    "AssessmentState",
    "knowledge_gaps",
    "next_question",
    "record_response",
    "start_assessment",
    "GenerationRequest",
    "GenerationResponse",
    "TemplateGenerator",
    "bounded_generate",
    "AssessmentSummary",
    "summarize_assessment",
    "GlucoseSummary",
    "PatientContext",
    "QAResponse",
    "answer_question",
    "rewrite_question",
]

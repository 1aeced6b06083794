"""Four-part pre-visit summary for the physician.

Section content is extracted by rules (lexicon matches over the patient's
free-text entries plus the graded assessment); the generator adapter only
words the sections. If the generator fails, the summary degrades to the
rule-derived content so the attention flags are never lost.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime

from .assessment import AssessmentState, AssessmentStatus, knowledge_gaps
from .generator import (
    GenerationError,
    GenerationRequest,
    TemplateGenerator,
    TextGenerator,
    bounded_generate,
)
from ..errors import StateError

# seeded from the flag wording physicians asked for: worries about side
# effects and signs of shaky medication compliance
CONCERN_LEXICON = (
    "worry", "worried", "worries", "afraid", "scared", "fear", "anxious",
    "side effect", "hurt me", "dangerous", "担心", "害怕",
)
NON_ADHERENCE_LEXICON = (
    "forgot to take", "stopped taking", "skip my", "skipped my", "didn't take",
    "did not take", "ran out of", "only take it sometimes", "漏服", "停药",
)
EMOTION_LEXICON = (
    "can't sleep", "cannot sleep", "stressed", "upset", "frustrated", "angry",
    "sad", "hopeless", "nervous", "烦躁", "睡不着",
)


@dataclass
class AssessmentSummary:
    patient_id: str
    chief_complaint_timeline: list[tuple[datetime, str]] = field(default_factory=list)
    concerns: list[str] = field(default_factory=list)
    key_questions: list[str] = field(default_factory=list)
    emotional_behavioral_patterns: list[str] = field(default_factory=list)
    attention_flags: list[str] = field(default_factory=list)
    degraded: bool = False


def _contains_any(text: str, lexicon) -> bool:
    lowered = text.casefold()
    return any(term in lowered for term in lexicon)


def summarize_assessment(
    state: AssessmentState,
    free_text_responses: list[tuple[datetime, str]],
    generator: TextGenerator | None = None,
    timeout_s: float | None = None,
) -> AssessmentSummary:
    if state.status is not AssessmentStatus.DONE:
        raise StateError("summaries are produced after the assessment is done")
    generator = generator or TemplateGenerator()

    entries = sorted(free_text_responses, key=lambda e: e[0])
    concerns = [text for _, text in entries if _contains_any(text, CONCERN_LEXICON)]
    questions = [text for _, text in entries if "?" in text or "？" in text]
    patterns = [text for _, text in entries if _contains_any(text, EMOTION_LEXICON)]

    flags: list[str] = []
    for topic, level in knowledge_gaps(state):
        if level == 1:
            item_ids = [a.item_id for a in state.asked if a.topic is topic and a.correct is False]
            flags.append(f"{topic.value} knowledge gap (level 1) [items: {', '.join(item_ids)}]")
    for text in concerns:
        flags.append(f'patient concern: "{text}"')
    for _, text in entries:
        if _contains_any(text, NON_ADHERENCE_LEXICON):
            flags.append(f'possible medication non-adherence: "{text}"')

    summary = AssessmentSummary(
        patient_id=state.patient_id,
        chief_complaint_timeline=list(entries),
        concerns=concerns,
        key_questions=questions,
        emotional_behavioral_patterns=patterns,
        attention_flags=flags,
    )

    # let the generator word each section; rule content survives failure
    try:
        for name, lines in (
            ("concerns", concerns),
            ("key_questions", questions),
            ("emotional_behavioral_patterns", patterns),
        ):
            request = GenerationRequest(
                instruction=f"assessment_section:{name}", slots={"lines": lines}
            )
            text = bounded_generate(generator, request, timeout_s).text
            setattr(summary, name, [ln for ln in text.split("\n") if ln])
    except GenerationError:
        summary.degraded = True
    return summary

"""Adaptive assessment engine.

A three-level staircase: every patient starts at level 2, a correct answer
moves difficulty up one level, an incorrect one moves it down, clamped to
[1, 3]. Free-text items grade n/a and leave the level alone. Topics are
cycled round-robin in enum order so no single area dominates the visit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..errors import StateError, ValidationError
from .bank import DIFFICULTIES, QuestionBank, QuestionItem, Topic

DEFAULT_QUESTION_BUDGET = 8
_TOPICS = list(Topic)


class AssessmentStatus(str, Enum):
    ACTIVE = "active"
    DONE = "done"


@dataclass
class AskedItem:
    item_id: str
    topic: Topic
    difficulty: int
    response: str
    correct: bool | None  # None = not graded (free text)


@dataclass
class AssessmentState:
    patient_id: str
    current_level: int = 2
    asked: list[AskedItem] = field(default_factory=list)
    question_budget: int = DEFAULT_QUESTION_BUDGET
    status: AssessmentStatus = AssessmentStatus.ACTIVE
    topic_cursor: int = 0
    last_issued: str | None = None

    def asked_ids(self) -> set[str]:
        ids = {a.item_id for a in self.asked}
        if self.last_issued:
            ids.add(self.last_issued)
        return ids


def start_assessment(patient_context, bank: QuestionBank, question_budget: int = DEFAULT_QUESTION_BUDGET) -> AssessmentState:
    """Fresh state at level 2 with nothing asked. Validates the bank."""
    bank.validate()
    if question_budget < 1:
        raise ValidationError("question budget must be >= 1")
    patient_id = getattr(patient_context, "patient_id", patient_context)
    return AssessmentState(patient_id=patient_id, question_budget=question_budget)


def _coverage_complete(state: AssessmentState) -> bool:
    # done early once every topic has a correct answer at level >= 2
    covered = {a.topic for a in state.asked if a.correct and a.difficulty >= 2}
    return covered == set(_TOPICS)


def next_question(state: AssessmentState, bank: QuestionBank) -> QuestionItem | None:
    """The next unasked item, or None once the assessment is done.

    Selection order: topics round-robin from the cursor; within a topic the
    current level is preferred, then the nearest level (lower first).
    """
    if state.status is AssessmentStatus.DONE:
        return None
    if state.last_issued is not None:
        raise StateError("previous question has not been answered")
    if len(state.asked) >= state.question_budget or _coverage_complete(state):
        state.status = AssessmentStatus.DONE
        return None

    asked = state.asked_ids()
    levels = sorted(DIFFICULTIES, key=lambda d: (abs(d - state.current_level), d))
    for level in levels:
        for offset in range(len(_TOPICS)):
            topic = _TOPICS[(state.topic_cursor + offset) % len(_TOPICS)]
            for item in bank.cell(topic, level):
                if item.id not in asked:
                    state.topic_cursor = (state.topic_cursor + offset + 1) % len(_TOPICS)
                    state.last_issued = item.id
                    return item
    state.status = AssessmentStatus.DONE  # bank exhausted
    return None


def record_response(state: AssessmentState, item_id: str, response: str, bank: QuestionBank) -> AssessmentState:
    """Grade the response and move the staircase."""
    if state.status is AssessmentStatus.DONE:
        raise StateError("assessment already done")
    if state.last_issued != item_id:
        raise StateError(f"item {item_id!r} was not the last question issued")
    item = bank.get(item_id)
    correct = item.answer_key.grade(response)
    state.asked.append(
        AskedItem(item_id=item.id, topic=item.topic, difficulty=item.difficulty,
                  response=response, correct=correct)
    )
    if correct is True:
        state.current_level = min(3, state.current_level + 1)
    elif correct is False:
        state.current_level = max(1, state.current_level - 1)
    state.last_issued = None
    return state


def knowledge_gaps(state: AssessmentState) -> list[tuple[Topic, int]]:
    """(topic, lowest difficulty failed) per topic with any incorrect answer."""
    if state.status is not AssessmentStatus.DONE:
        raise StateError("knowledge gaps are read after the assessment is done")
    lowest: dict[Topic, int] = {}
    for a in state.asked:
        if a.correct is False:
            lowest[a.topic] = min(lowest.get(a.topic, 4), a.difficulty)
    return [(t, lowest[t]) for t in _TOPICS if t in lowest]

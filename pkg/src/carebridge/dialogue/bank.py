"""Question bank for the adaptive assessment.

Bank files reuse the line-delimited convention of the graph document:

    Q <TAB> id <TAB> topic <TAB> difficulty <TAB> text <TAB> answer_key

Answer keys come in three shapes:
    choice:opt1|opt2|opt3=correct   graded by case-folded equality
    range:lo..hi                    graded by numeric containment
    free                            not graded (n/a)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import IO, Iterable

from ..errors import DuplicateError, ParseError, ValidationError


class Topic(str, Enum):
    GLUCOSE_MONITORING = "glucose_monitoring"
    DIET = "diet"
    MEDICATION = "medication"
    COMPLICATIONS = "complications"
    EXERCISE = "exercise"
    FOLLOW_UP = "follow_up"


DIFFICULTIES = (1, 2, 3)


@dataclass(frozen=True)
class AnswerKey:
    kind: str  # choice | range | free
    options: tuple[str, ...] = ()
    correct: str = ""
    low: float = 0.0
    high: float = 0.0

    @classmethod
    def parse(cls, raw: str) -> "AnswerKey":
        if raw == "free":
            return cls(kind="free")
        if raw.startswith("choice:"):
            body = raw[len("choice:"):]
            options_raw, sep, correct = body.rpartition("=")
            if not sep or not correct:
                raise ValueError("choice key needs '=correct'")
            options = tuple(o for o in options_raw.split("|") if o)
            if correct not in options:
                raise ValueError("correct option not among the choices")
            return cls(kind="choice", options=options, correct=correct)
        if raw.startswith("range:"):
            lo_raw, sep, hi_raw = raw[len("range:"):].partition("..")
            if not sep:
                raise ValueError("range key needs 'lo..hi'")
            lo, hi = float(lo_raw), float(hi_raw)
            if hi < lo:
                raise ValueError("range upper bound below lower bound")
            return cls(kind="range", low=lo, high=hi)
        raise ValueError(f"unknown answer key {raw!r}")

    def grade(self, response: str) -> bool | None:
        """True/False for graded kinds, None (n/a) for free text."""
        if self.kind == "free":
            return None
        if self.kind == "choice":
            return response.strip().casefold() == self.correct.casefold()
        try:
            value = float(str(response).strip())
        except ValueError:
            return False
        return self.low <= value <= self.high


@dataclass(frozen=True)
class QuestionItem:
    id: str
    topic: Topic
    difficulty: int
    text: str
    answer_key: AnswerKey

    def __post_init__(self):
        if self.difficulty not in DIFFICULTIES:
            raise ValidationError(f"item {self.id}: difficulty must be 1..3")


class QuestionBank:
    def __init__(self, items: Iterable[QuestionItem]):
        self.items: list[QuestionItem] = list(items)
        self._by_id = {}
        for item in self.items:
            if item.id in self._by_id:
                raise DuplicateError(f"duplicate question id {item.id!r}")
            self._by_id[item.id] = item

    def __len__(self):
        return len(self.items)

    def get(self, item_id: str) -> QuestionItem:
        return self._by_id[item_id]

    def cell(self, topic: Topic, difficulty: int) -> list[QuestionItem]:
        return [q for q in self.items if q.topic is topic and q.difficulty == difficulty]

    def validate(self) -> None:
        """Every (topic, difficulty) cell must hold at least one item."""
        for topic in Topic:
            for difficulty in DIFFICULTIES:
                if not self.cell(topic, difficulty):
                    raise ValidationError(
                        f"bank missing a {topic.value} item at difficulty {difficulty}"
                    )


def load_bank(document: IO[str] | Iterable[str] | str) -> QuestionBank:
    if isinstance(document, str):
        lines = document.splitlines()
    else:
        lines = (line.rstrip("\n") for line in document)
    items = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if fields[0] != "Q" or len(fields) != 6:
            raise ParseError("question line needs 6 fields starting with Q", lineno)
        _, item_id, topic_raw, difficulty_raw, text, key_raw = fields
        try:
            topic = Topic(topic_raw)
        except ValueError:
            raise ParseError(f"unknown topic {topic_raw!r}", lineno) from None
        try:
            difficulty = int(difficulty_raw)
            key = AnswerKey.parse(key_raw)
            items.append(QuestionItem(item_id, topic, difficulty, text, key))
        except (ValueError, ValidationError) as exc:
            raise ParseError(str(exc), lineno) from None
    bank = QuestionBank(items)
    bank.validate()
    return bank


def fixture_bank() -> QuestionBank:
    """The committed demo bank shipped as package data."""
    text = resources.files("carebridge.dialogue").joinpath("data/bank.tsv").read_text("utf-8")
    return load_bank(text)

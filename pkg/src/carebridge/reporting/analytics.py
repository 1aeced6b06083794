"""Per-stream analytics feeding the monthly report.

Numbers a physician compares month over month: glucose mean/sd, the
ordinary-least-squares slope in mmol/L per day, time in range over the
consensus band [3.9, 10.0] mmol/L, symptom counts, and a sentiment
distribution over patient utterances.
"""

from __future__ import annotations

import calendar
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime
from typing import Iterable, Protocol, Sequence

import numpy as np

from ..records.types import GlucoseReading, SymptomEntry

TIR_LOW = 3.9
TIR_HIGH = 10.0


@dataclass(frozen=True)
class Period:
    """A calendar month, half-open [start, end)."""

    year: int
    month: int

    @property
    def start(self) -> datetime:
        return datetime(self.year, self.month, 1)

    @property
    def end(self) -> datetime:
        if self.month == 12:
            return datetime(self.year + 1, 1, 1)
        return datetime(self.year, self.month + 1, 1)

    @property
    def days(self) -> int:
        return calendar.monthrange(self.year, self.month)[1]

    def contains(self, at: datetime) -> bool:
        return self.start <= at < self.end

    @property
    def label(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"

    @classmethod
    def parse(cls, label: str) -> "Period":
        year, _, month = label.partition("-")
        return cls(int(year), int(month))


@dataclass(frozen=True)
class GlucoseTrend:
    mean: float | None
    sd: float | None  # population sd
    slope: float | None  # mmol/L per day; None when n < 2
    time_in_range: float | None
    n: int


def glucose_trend(series: Sequence[GlucoseReading], period: Period) -> GlucoseTrend:
    values = [r.value for r in series if period.contains(r.taken_at)]
    times = [r.taken_at for r in series if period.contains(r.taken_at)]
    n = len(values)
    if n == 0:
        return GlucoseTrend(mean=None, sd=None, slope=None, time_in_range=None, n=0)
    ys = np.asarray(values, dtype=np.float64)
    mean = float(ys.mean())
    sd = float(ys.std())  # ddof=0: population sd
    in_range = float(np.mean((ys >= TIR_LOW) & (ys <= TIR_HIGH)))
    slope = None
    if n >= 2:
        xs = np.asarray(
            [(t - period.start).total_seconds() / 86400.0 for t in times], dtype=np.float64
        )
        if np.ptp(xs) > 0:
            slope = float(np.polyfit(xs, ys, 1)[0])
        else:
            slope = 0.0  # all readings at one instant carry no trend
    return GlucoseTrend(mean=mean, sd=sd, slope=slope, time_in_range=in_range, n=n)


def symptom_frequency(entries: Iterable[SymptomEntry], period: Period) -> dict[str, int]:
    counts = Counter(e.code.value for e in entries if period.contains(e.at))
    return dict(sorted(counts.items()))


SENTIMENT_CLASSES = ("anxiety", "confusion", "satisfaction", "neutral")

_ANXIETY = (
    "worried", "worry", "worries", "afraid", "scared", "anxious", "nervous",
    "frightened", "担心", "害怕",
)
_CONFUSION = (
    "confused", "don't understand", "do not understand", "unclear", "puzzled",
    "makes no sense", "why can't", "not sure what", "不明白", "不懂",
)
_SATISFACTION = (
    "thank", "thanks", "great", "helpful", "satisfied", "much clearer",
    "feel better about", "well explained", "谢谢", "太好了",
)


class SentimentClassifier(Protocol):
    def classify(self, text: str) -> str: ...


class LexiconSentimentClassifier:
    """Seeded keyword classifier; the deterministic reference adapter."""

    def classify(self, text: str) -> str:
        lowered = text.casefold()
        if any(k in lowered for k in _ANXIETY):
            return "anxiety"
        if any(k in lowered for k in _CONFUSION):
            return "confusion"
        if any(k in lowered for k in _SATISFACTION):
            return "satisfaction"
        return "neutral"


@dataclass
class SentimentSummary:
    distribution: dict[str, float]
    evidence: dict[str, str] = field(default_factory=dict)  # top utterance per nonzero class
    empty: bool = False
    degraded: bool = False

    def __post_init__(self):
        total = sum(self.distribution.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"sentiment fractions must sum to 1, got {total}")
        if any(v < 0 for v in self.distribution.values()):
            raise ValueError("sentiment fractions must be >= 0")


def _neutral_summary(empty: bool = False, degraded: bool = False) -> SentimentSummary:
    dist = {c: 0.0 for c in SENTIMENT_CLASSES}
    dist["neutral"] = 1.0
    return SentimentSummary(distribution=dist, empty=empty, degraded=degraded)


def sentiment_summary(
    utterances: Sequence[str], classifier: SentimentClassifier | None = None
) -> SentimentSummary:
    classifier = classifier or LexiconSentimentClassifier()
    if not utterances:
        return _neutral_summary(empty=True)
    counts = {c: 0 for c in SENTIMENT_CLASSES}
    evidence: dict[str, str] = {}
    try:
        for text in utterances:
            label = classifier.classify(text)
            if label not in counts:
                raise ValueError(f"classifier produced unknown class {label!r}")
            counts[label] += 1
            evidence.setdefault(label, text)
    except Exception:
        return _neutral_summary(degraded=True)
    total = len(utterances)
    distribution = {c: counts[c] / total for c in SENTIMENT_CLASSES}
    evidence = {c: evidence[c] for c in SENTIMENT_CLASSES if counts[c] > 0}
    return SentimentSummary(distribution=distribution, evidence=evidence)

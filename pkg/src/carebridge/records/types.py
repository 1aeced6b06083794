"""Record types for the longitudinal health streams.

All glucose values are mmol/L; convert mg/dL once at the API boundary
with mmol_from_mgdl. Timestamps are patient-local naive datetimes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, time, timedelta
from enum import Enum

from ..errors import ValidationError

# plausibility band for a human glucose reading, mmol/L (exclusive bounds)
GLUCOSE_MIN = 0.0
GLUCOSE_MAX = 50.0

MGDL_PER_MMOL = 18.016


def mmol_from_mgdl(value_mgdl: float) -> float:
    """Convert a mg/dL glucose value to mmol/L."""
    return value_mgdl / MGDL_PER_MMOL


class GlucoseContext(str, Enum):
    FASTING = "fasting"
    POSTPRANDIAL = "postprandial"
    RANDOM = "random"


@dataclass(frozen=True)
class GlucoseReading:
    patient_id: str
    taken_at: datetime
    value: float  # mmol/L
    context: GlucoseContext = GlucoseContext.RANDOM

    def __post_init__(self):
        if not (GLUCOSE_MIN < self.value < GLUCOSE_MAX):
            raise ValidationError(
                f"glucose {self.value} mmol/L outside the plausibility band "
                f"({GLUCOSE_MIN}, {GLUCOSE_MAX})"
            )


@dataclass(frozen=True)
class MedicationSchedule:
    patient_id: str
    med_name: str
    dose: str
    purpose: str
    times_of_day: tuple[time, ...]
    active: bool = True

    def __post_init__(self):
        if not self.times_of_day:
            raise ValidationError(f"schedule for {self.med_name}: times_of_day must be non-empty")
        for a, b in zip(self.times_of_day, self.times_of_day[1:]):
            if b <= a:
                raise ValidationError(
                    f"schedule for {self.med_name}: times_of_day must strictly increase"
                )


TAKEN_GRACE = timedelta(hours=6)


@dataclass(frozen=True)
class MedicationEvent:
    patient_id: str
    med_name: str
    scheduled_at: datetime
    outcome: str  # "taken" | "missed"
    taken_at: datetime | None = None

    def __post_init__(self):
        if self.outcome not in ("taken", "missed"):
            raise ValidationError("medication outcome must be 'taken' or 'missed'")
        if self.outcome == "taken":
            if self.taken_at is None:
                raise ValidationError("taken events need a taken_at timestamp")
            if abs(self.taken_at - self.scheduled_at) > TAKEN_GRACE:
                raise ValidationError("taken_at must be within 6 hours of the scheduled slot")
        elif self.taken_at is not None:
            raise ValidationError("missed events must not carry taken_at")


class SymptomCode(str, Enum):
    BLURRED_VISION = "blurred_vision"
    NUMBNESS = "numbness"
    FATIGUE = "fatigue"
    THIRST = "thirst"
    FREQUENT_URINATION = "frequent_urination"
    OTHER = "other"


@dataclass(frozen=True)
class SymptomEntry:
    patient_id: str
    at: datetime
    code: SymptomCode
    severity: int
    note: str = ""

    def __post_init__(self):
        if not 1 <= self.severity <= 5:
            raise ValidationError("symptom severity must be in [1, 5]")


@dataclass(frozen=True)
class SleepEntry:
    patient_id: str
    at: datetime  # morning the sleep is reported for
    hours: float
    quality: int = 3  # 1..5
    note: str = ""

    def __post_init__(self):
        if self.hours < 0 or self.hours > 24:
            raise ValidationError("sleep hours must be in [0, 24]")
        if not 1 <= self.quality <= 5:
            raise ValidationError("sleep quality must be in [1, 5]")


class AlertKind(str, Enum):
    TRACKING_GAP = "tracking_gap"
    HYPERGLYCEMIA = "hyperglycemia"
    MISSED_MEDICATION = "missed_medication"


@dataclass
class Alert:
    id: str
    patient_id: str
    kind: AlertKind
    detected_at: datetime
    evidence: list[str] = field(default_factory=list)
    delivered_to: list[str] = field(default_factory=list)
    open: bool = True

    def __post_init__(self):
        if not self.evidence:
            raise ValidationError("alerts must carry evidence")


@dataclass(frozen=True)
class CareConfig:
    gap_days: float = 3.0
    high_mmol: float = 13.9
    consecutive_missed: int = 2
    lookback_days: int = 14  # how far back missed-dose runs are searched

    def __post_init__(self):
        for name in ("gap_days", "high_mmol", "consecutive_missed", "lookback_days"):
            if getattr(self, name) <= 0:
                raise ValidationError(f"care config {name} must be > 0")

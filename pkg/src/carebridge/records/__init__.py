from .types import (
    Alert,
    AlertKind,
    CareConfig,
    GlucoseContext,
    GlucoseReading,
    MedicationEvent,
    MedicationSchedule,
    SleepEntry,
    SymptomCode,
    SymptomEntry,
    mmol_from_mgdl,
)
from .store import HealthRecords
from .carerules import evaluate_care_rules

__all__ = [
    "Alert",
    "AlertKind",
    "CareConfig",
    "GlucoseContext",
    "GlucoseReading",
    "MedicationEvent",
    "MedicationSchedule",
    "SleepEntry",
    "SymptomCode",
    "SymptomEntry",
    "mmol_from_mgdl",
    "HealthRecords",
    "evaluate_care_rules",
]

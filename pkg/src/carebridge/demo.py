"""Deterministic demo dataset: one scripted patient month.

Shared by the golden-report test, the `report` CLI demo and the narrative
example scripts. Everything is a fixed function of the period, so the
resulting monthly report serializes byte-identically on every run.
"""

from __future__ import annotations

from datetime import datetime, time, timedelta

from .records import (
    CareConfig,
    GlucoseContext,
    GlucoseReading,
    HealthRecords,
    MedicationEvent,
    MedicationSchedule,
    SleepEntry,
    SymptomCode,
    SymptomEntry,
    evaluate_care_rules,
)
from .reporting.analytics import Period

DEMO_PATIENT = "patient-demo"
DEMO_PHYSICIAN = "dr-demo"
DEMO_FAMILY = "family-demo"

# evening doses the scripted patient skipped or forgot (day of month)
_MISSED_EVENINGS = (11, 12, 24)
_SKIPPED_EVENINGS = (20,)


def demo_utterances(period: Period) -> list[tuple[datetime, str]]:
    day = period.start
    return [
        (day + timedelta(days=2, hours=9), "What does HbA1c mean exactly?"),
        (day + timedelta(days=4, hours=20), "I am worried the new tablets will hurt my stomach."),
        (day + timedelta(days=8, hours=8), "Slept badly, feet were tingling again."),
        (day + timedelta(days=10, hours=12), "Can I eat watermelon after lunch?"),
        (day + timedelta(days=13, hours=19), "I don't understand why rice is a problem, it is not sweet."),
        (day + timedelta(days=17, hours=9), "Thanks, the explanation about walking after dinner was helpful."),
        (day + timedelta(days=21, hours=21), "Readings look better this week."),
        (day + timedelta(days=25, hours=7), "A bit scared, my sugar was very high last night."),
        (day + timedelta(days=27, hours=13), "Feeling much clearer about the plan now, thank you."),
    ]


def demo_knowledge_gaps() -> list[tuple[str, int]]:
    return [("diet", 1), ("medication", 2)]


def build_demo_month(records: HealthRecords, period: Period | None = None) -> Period:
    """Populate a 30-day scripted month for DEMO_PATIENT; returns the period."""
    period = period or Period(2025, 6)
    start = period.start
    pid = DEMO_PATIENT

    records.record(
        MedicationSchedule(
            patient_id=pid,
            med_name="metformin",
            dose="500 mg",
            purpose="helps control blood sugar",
            times_of_day=(time(8, 0), time(20, 0)),
        )
    )

    for d in range(30):
        day = start + timedelta(days=d)
        # fasting reading every morning: gentle upward drift plus a weekly wave
        fasting = round(6.2 + 0.03 * d + 0.6 * ((d * 3) % 7) / 7, 2)
        records.record(
            GlucoseReading(pid, day + timedelta(hours=6, minutes=45), fasting, GlucoseContext.FASTING)
        )
        # post-lunch reading every other day
        if d % 2 == 0:
            post = round(8.4 + 0.04 * d + 0.9 * ((d * 5) % 4) / 4, 2)
            records.record(
                GlucoseReading(pid, day + timedelta(hours=13, minutes=10), post, GlucoseContext.POSTPRANDIAL)
            )
        # medication events: mornings always taken, evenings per script
        morning = day + timedelta(hours=8)
        records.record(MedicationEvent(pid, "metformin", morning, "taken", taken_at=morning))
        evening = day + timedelta(hours=20)
        day_of_month = d + 1
        if day_of_month in _MISSED_EVENINGS:
            pass  # no event at all
        elif day_of_month in _SKIPPED_EVENINGS:
            records.record(MedicationEvent(pid, "metformin", evening, "missed"))
        else:
            records.record(
                MedicationEvent(pid, "metformin", evening, "taken", taken_at=evening + timedelta(minutes=20))
            )
        # sleep log most mornings
        if d % 5 != 4:
            hours = 6.0 + ((d * 2) % 5) * 0.5
            records.record(SleepEntry(pid, day + timedelta(hours=7), hours=hours, quality=3 + (d % 3)))

    # symptoms across the month
    records.record(SymptomEntry(pid, start + timedelta(days=4, hours=21), SymptomCode.FATIGUE, 2))
    records.record(SymptomEntry(pid, start + timedelta(days=7, hours=23), SymptomCode.NUMBNESS, 2, "tingling toes"))
    records.record(SymptomEntry(pid, start + timedelta(days=11, hours=10), SymptomCode.BLURRED_VISION, 3))
    records.record(SymptomEntry(pid, start + timedelta(days=17, hours=15), SymptomCode.THIRST, 2))
    records.record(SymptomEntry(pid, start + timedelta(days=18, hours=16), SymptomCode.THIRST, 2))
    records.record(SymptomEntry(pid, start + timedelta(days=24, hours=22), SymptomCode.FATIGUE, 3))

    # one genuinely high evening on day 25 trips the hyperglycemia rule
    high_at = start + timedelta(days=24, hours=22, minutes=30)
    records.record(GlucoseReading(pid, high_at, 14.5, GlucoseContext.RANDOM))
    evaluate_care_rules(records, pid, high_at + timedelta(hours=2), CareConfig())
    return period

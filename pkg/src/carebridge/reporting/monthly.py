"""Monthly report assembly and the two-axis record organization.

A report is a pure projection of the stored records: rebuilding it from
the same snapshot yields a byte-identical serialization, which is what
the golden-file tests pin down.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Sequence

from ..errors import StateError
from ..records.store import HealthRecords
from .analytics import (
    GlucoseTrend,
    Period,
    SentimentClassifier,
    SentimentSummary,
    glucose_trend,
    sentiment_summary,
    symptom_frequency,
)

THEMES = ("glucose", "medication", "symptoms", "knowledge", "mood")


@dataclass
class MonthlyReport:
    patient_id: str
    period: Period
    glucose: GlucoseTrend
    adherence: float
    symptom_frequency: dict[str, int]
    knowledge_gaps: list[tuple[str, int]]
    sentiment: SentimentSummary
    open_alerts: list[dict[str, Any]]
    chronological: list[dict[str, Any]]
    thematic: dict[str, list[dict[str, Any]]] = field(default_factory=dict)


def _event(at: datetime, source: str, description: str) -> dict[str, Any]:
    return {"at": at.isoformat(timespec="seconds"), "source": source, "description": description}


def _collect_events(
    patient_id: str,
    window: tuple[datetime, datetime],
    records: HealthRecords,
    utterances: Sequence[tuple[datetime, str]] = (),
    sessions: Sequence[Any] = (),
    assessments: Sequence[Any] = (),
    snapshot=None,
) -> dict[str, list[dict[str, Any]]]:
    """Events per theme; each stored event lands in exactly one theme."""
    start, end = window
    by_theme: dict[str, list[dict[str, Any]]] = {t: [] for t in THEMES}

    for r in records.glucose_series(patient_id, window, snapshot):
        by_theme["glucose"].append(
            _event(r.taken_at, "glucose", f"{r.value} mmol/L ({r.context.value})")
        )
    for e in records.medication_events(patient_id, snapshot):
        if start <= e.scheduled_at < end:
            desc = f"{e.med_name} {e.outcome}"
            by_theme["medication"].append(_event(e.scheduled_at, "medication", desc))
    for s in records.symptoms(patient_id, window, snapshot):
        by_theme["symptoms"].append(
            _event(s.at, "symptom", f"{s.code.value} severity {s.severity}")
        )
    for s in records.sleep_entries(patient_id, snapshot):
        if start <= s.at < end:
            by_theme["mood"].append(_event(s.at, "sleep", f"slept {s.hours} h"))
    for at, text in utterances:
        if start <= at < end:
            by_theme["mood"].append(_event(at, "utterance", text))
    for session in sessions:
        opened = getattr(session, "opened_at", None)
        if opened is not None and start <= opened < end:
            by_theme["knowledge"].append(
                _event(opened, "consultation", f"consultation {session.id}")
            )
    for assessment in assessments:
        at = getattr(assessment, "finished_at", None) or start
        if start <= at < end:
            n = len(getattr(assessment, "asked", []))
            by_theme["knowledge"].append(_event(at, "assessment", f"assessment of {n} questions"))
    return by_theme


def organize_record(
    patient_id: str,
    horizon: tuple[datetime, datetime],
    records: HealthRecords,
    utterances: Sequence[tuple[datetime, str]] = (),
    sessions: Sequence[Any] = (),
    assessments: Sequence[Any] = (),
) -> dict[str, Any]:
    """Chronological and thematic views over the same event multiset."""
    snapshot = records.store.snapshot()
    by_theme = _collect_events(
        patient_id, horizon, records, utterances, sessions, assessments, snapshot
    )
    chronological = sorted(
        (e for events in by_theme.values() for e in events),
        key=lambda e: (e["at"], e["source"], e["description"]),
    )
    return {"chronological": chronological, "thematic": by_theme}


def build_monthly_report(
    patient_id: str,
    period: Period,
    records: HealthRecords,
    utterances: Sequence[tuple[datetime, str]] = (),
    knowledge_gaps: Sequence[tuple[str, int]] = (),
    sessions: Sequence[Any] = (),
    assessments: Sequence[Any] = (),
    classifier: SentimentClassifier | None = None,
    now: datetime | None = None,
    force_preview: bool = False,
) -> MonthlyReport:
    """Compose all sub-analytics for one calendar month."""
    now = now or datetime.now()
    if now < period.end and not force_preview:
        raise StateError(f"period {period.label} is still open; pass force_preview to peek")
    snapshot = records.store.snapshot()
    window = (period.start, period.end)

    series = records.glucose_series(patient_id, window, snapshot)
    trend = glucose_trend(series, period)
    adherence = records.adherence(patient_id, window)
    symptoms = symptom_frequency(records.symptoms(patient_id, None, snapshot), period)
    in_period_utterances = [text for at, text in utterances if period.contains(at)]
    sentiment = sentiment_summary(in_period_utterances, classifier)
    alerts = [
        {
            "kind": a.kind.value,
            "detected_at": a.detected_at.isoformat(timespec="seconds"),
            "evidence": list(a.evidence),
        }
        for a in records.open_alerts(patient_id, snapshot).values()
    ]
    alerts.sort(key=lambda a: (a["detected_at"], a["kind"]))

    organized = organize_record(
        patient_id, window, records, utterances, sessions, assessments
    )
    return MonthlyReport(
        patient_id=patient_id,
        period=period,
        glucose=trend,
        adherence=adherence,
        symptom_frequency=symptoms,
        knowledge_gaps=[(str(t), int(d)) for t, d in knowledge_gaps],
        sentiment=sentiment,
        open_alerts=alerts,
        chronological=organized["chronological"],
        thematic=organized["thematic"],
    )


def _round(value: float | None, digits: int = 6) -> float | None:
    return None if value is None else round(value, digits)


def report_document(report: MonthlyReport) -> dict[str, Any]:
    """The report as a plain JSON-safe document (stable field set)."""
    return {
        "patient_id": report.patient_id,
        "period": report.period.label,
        "glucose": {
            "mean": _round(report.glucose.mean),
            "sd": _round(report.glucose.sd),
            "slope_per_day": _round(report.glucose.slope),
            "time_in_range": _round(report.glucose.time_in_range),
            "n": report.glucose.n,
        },
        "adherence": _round(report.adherence),
        "symptom_frequency": report.symptom_frequency,
        "knowledge_gaps": [[t, d] for t, d in report.knowledge_gaps],
        "sentiment": {
            "distribution": {k: _round(v) for k, v in sorted(report.sentiment.distribution.items())},
            "evidence": dict(sorted(report.sentiment.evidence.items())),
            "empty": report.sentiment.empty,
            "degraded": report.sentiment.degraded,
        },
        "open_alerts": report.open_alerts,
        "narrative": {
            "chronological": report.chronological,
            "thematic": {t: report.thematic.get(t, []) for t in THEMES},
        },
    }


def serialize_report(report: MonthlyReport) -> str:
    """Stable, key-sorted serialization; byte-exact for golden tests."""
    return json.dumps(report_document(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

"""Append-only health record streams over a StoreAdapter.

Key layout (one log per patient and stream):
    glucose/<patient>      readings
    medevent/<patient>     medication events
    symptom/<patient>      symptom entries
    sleep/<patient>        sleep entries
    issued/<patient>       reminder/prompt issuance marks (for idempotent ticks)
    alertlog/<patient>     alert open/extend/close actions (folded on read)
Schedules are configuration, stored under puts: schedule/<patient>/<med>.
"""

from __future__ import annotations

from datetime import datetime, time, timedelta
from typing import Any

from ..errors import DuplicateError, ValidationError
from ..service.stores import StoreAdapter, StoreSnapshot
from .types import (
    Alert,
    AlertKind,
    GlucoseContext,
    GlucoseReading,
    MedicationEvent,
    MedicationSchedule,
    SleepEntry,
    SymptomCode,
    SymptomEntry,
)

DEFAULT_MEALS = (time(7, 30), time(12, 0), time(18, 30))
REMINDER_WINDOW = timedelta(minutes=15)
MORNING_WINDOW = (time(6, 0), time(10, 0))
POST_MEAL_START = timedelta(minutes=30)
POST_MEAL_END = timedelta(minutes=90)


def _iso(dt: datetime) -> str:
    return dt.isoformat(timespec="seconds")


class HealthRecords:
    def __init__(self, store: StoreAdapter, meals: tuple[time, ...] = DEFAULT_MEALS,
                 reminder_window: timedelta = REMINDER_WINDOW):
        self.store = store
        self.default_meals = tuple(meals)
        self.reminder_window = reminder_window

    # -- writes ----------------------------------------------------------

    def record(self, entry: Any) -> str:
        """Validate and append a record; returns its stored id."""
        if isinstance(entry, GlucoseReading):
            doc = {
                "taken_at": _iso(entry.taken_at),
                "value": entry.value,
                "context": entry.context.value,
            }
            self.store.append(f"glucose/{entry.patient_id}", doc)
            return f"glucose/{entry.patient_id}/{_iso(entry.taken_at)}"
        if isinstance(entry, MedicationSchedule):
            doc = {
                "med_name": entry.med_name,
                "dose": entry.dose,
                "purpose": entry.purpose,
                "times_of_day": [t.strftime("%H:%M") for t in entry.times_of_day],
                "active": entry.active,
            }
            self.store.put(f"schedule/{entry.patient_id}/{entry.med_name}", doc)
            return f"schedule/{entry.patient_id}/{entry.med_name}"
        if isinstance(entry, MedicationEvent):
            key = f"medevent/{entry.patient_id}"
            slot = _iso(entry.scheduled_at)
            for existing in self.store.log(key):
                if existing["med_name"] == entry.med_name and existing["scheduled_at"] == slot:
                    raise DuplicateError(
                        f"event already recorded for {entry.med_name} at {slot}"
                    )
            doc = {
                "med_name": entry.med_name,
                "scheduled_at": slot,
                "outcome": entry.outcome,
                "taken_at": _iso(entry.taken_at) if entry.taken_at else None,
            }
            self.store.append(key, doc)
            return f"{key}/{entry.med_name}/{slot}"
        if isinstance(entry, SymptomEntry):
            doc = {
                "at": _iso(entry.at),
                "code": entry.code.value,
                "severity": entry.severity,
                "note": entry.note,
            }
            self.store.append(f"symptom/{entry.patient_id}", doc)
            return f"symptom/{entry.patient_id}/{_iso(entry.at)}"
        if isinstance(entry, SleepEntry):
            doc = {
                "at": _iso(entry.at),
                "hours": entry.hours,
                "quality": entry.quality,
                "note": entry.note,
            }
            self.store.append(f"sleep/{entry.patient_id}", doc)
            return f"sleep/{entry.patient_id}/{_iso(entry.at)}"
        raise ValidationError(f"unknown record type {type(entry).__name__}")

    def set_meals(self, patient_id: str, meals: list[time]) -> None:
        self.store.put(
            f"meals/{patient_id}", {"times": [t.strftime("%H:%M") for t in meals]}
        )

    # -- reads -----------------------------------------------------------

    def _snap(self, snapshot: StoreSnapshot | None) -> StoreSnapshot:
        return snapshot if snapshot is not None else self.store.snapshot()

    def glucose_series(
        self,
        patient_id: str,
        window: tuple[datetime, datetime] | None = None,
        snapshot: StoreSnapshot | None = None,
    ) -> list[GlucoseReading]:
        """Readings sorted by taken_at, regardless of arrival order."""
        snap = self._snap(snapshot)
        readings = [
            GlucoseReading(
                patient_id=patient_id,
                taken_at=datetime.fromisoformat(doc["taken_at"]),
                value=doc["value"],
                context=GlucoseContext(doc["context"]),
            )
            for doc in snap.log(f"glucose/{patient_id}")
        ]
        readings.sort(key=lambda r: r.taken_at)
        if window is not None:
            start, end = window
            readings = [r for r in readings if start <= r.taken_at < end]
        return readings

    def schedules(self, patient_id: str, snapshot: StoreSnapshot | None = None) -> list[MedicationSchedule]:
        snap = self._snap(snapshot)
        out = []
        for _, doc in snap.scan(f"schedule/{patient_id}/"):
            out.append(
                MedicationSchedule(
                    patient_id=patient_id,
                    med_name=doc["med_name"],
                    dose=doc["dose"],
                    purpose=doc["purpose"],
                    times_of_day=tuple(
                        time.fromisoformat(t) for t in doc["times_of_day"]
                    ),
                    active=doc["active"],
                )
            )
        return out

    def medication_events(self, patient_id: str, snapshot: StoreSnapshot | None = None) -> list[MedicationEvent]:
        snap = self._snap(snapshot)
        events = [
            MedicationEvent(
                patient_id=patient_id,
                med_name=doc["med_name"],
                scheduled_at=datetime.fromisoformat(doc["scheduled_at"]),
                outcome=doc["outcome"],
                taken_at=datetime.fromisoformat(doc["taken_at"]) if doc["taken_at"] else None,
            )
            for doc in snap.log(f"medevent/{patient_id}")
        ]
        events.sort(key=lambda e: e.scheduled_at)
        return events

    def symptoms(self, patient_id: str, window=None, snapshot=None) -> list[SymptomEntry]:
        snap = self._snap(snapshot)
        entries = [
            SymptomEntry(
                patient_id=patient_id,
                at=datetime.fromisoformat(doc["at"]),
                code=SymptomCode(doc["code"]),
                severity=doc["severity"],
                note=doc.get("note", ""),
            )
            for doc in snap.log(f"symptom/{patient_id}")
        ]
        entries.sort(key=lambda e: e.at)
        if window is not None:
            start, end = window
            entries = [e for e in entries if start <= e.at < end]
        return entries

    def sleep_entries(self, patient_id: str, snapshot=None) -> list[SleepEntry]:
        snap = self._snap(snapshot)
        entries = [
            SleepEntry(
                patient_id=patient_id,
                at=datetime.fromisoformat(doc["at"]),
                hours=doc["hours"],
                quality=doc.get("quality", 3),
                note=doc.get("note", ""),
            )
            for doc in snap.log(f"sleep/{patient_id}")
        ]
        entries.sort(key=lambda e: e.at)
        return entries

    def meal_times(self, patient_id: str, snapshot=None) -> tuple[time, ...]:
        snap = self._snap(snapshot)
        doc = snap.get(f"meals/{patient_id}")
        if doc is None:
            return self.default_meals
        return tuple(time.fromisoformat(t) for t in doc["times"])

    # -- reminders and prompts --------------------------------------------

    def _already_issued(self, snap, patient_id: str, mark: str) -> bool:
        return mark in snap.log(f"issued/{patient_id}")

    def due_reminders(self, patient_id: str, now: datetime, mark_issued: bool = True) -> list[str]:
        """Medication reminders for slots inside [now, now + window).

        A reminder names the medication, the dose and its purpose. Slots
        already covered by a recorded event never remind; issuance marks
        make overlapping scheduler ticks idempotent.
        """
        snap = self.store.snapshot()
        events = {
            (e.med_name, e.scheduled_at) for e in self.medication_events(patient_id, snap)
        }
        messages = []
        for schedule in self.schedules(patient_id, snap):
            if not schedule.active:
                continue
            for day_offset in (0, 1):  # the window may cross midnight
                day = now.date() + timedelta(days=day_offset)
                for tod in schedule.times_of_day:
                    slot = datetime.combine(day, tod)
                    if not (now <= slot < now + self.reminder_window):
                        continue
                    if (schedule.med_name, slot) in events:
                        continue
                    mark = f"reminder/{schedule.med_name}/{_iso(slot)}"
                    if self._already_issued(snap, patient_id, mark):
                        continue
                    messages.append(
                        f"Time for {schedule.med_name} ({schedule.dose}): {schedule.purpose}"
                    )
                    if mark_issued:
                        self.store.append(f"issued/{patient_id}", mark)
        return messages

    def due_prompts(self, patient_id: str, now: datetime, mark_issued: bool = True) -> list[str]:
        """Conversational prompts per the rule table.

        Morning (06:00-10:00): sleep prompt unless a sleep entry exists for
        today. 30-90 min after each mealtime: post-meal glucose prompt
        unless a postprandial reading landed in that window. Each prompt
        fires at most once per window per day.
        """
        snap = self.store.snapshot()
        prompts = []
        today = now.date()

        if MORNING_WINDOW[0] <= now.time() < MORNING_WINDOW[1]:
            have_sleep = any(e.at.date() == today for e in self.sleep_entries(patient_id, snap))
            mark = f"prompt/sleep/{today.isoformat()}"
            if not have_sleep and not self._already_issued(snap, patient_id, mark):
                prompts.append("How did you sleep last night? Did you wake up at night?")
                if mark_issued:
                    self.store.append(f"issued/{patient_id}", mark)

        readings = self.glucose_series(patient_id, snapshot=snap)
        for meal in self.meal_times(patient_id, snap):
            meal_dt = datetime.combine(today, meal)
            start, end = meal_dt + POST_MEAL_START, meal_dt + POST_MEAL_END
            if not (start <= now < end):
                continue
            have_reading = any(
                r.context is GlucoseContext.POSTPRANDIAL and start <= r.taken_at < end
                for r in readings
            )
            mark = f"prompt/postmeal/{meal.strftime('%H:%M')}/{today.isoformat()}"
            if not have_reading and not self._already_issued(snap, patient_id, mark):
                prompts.append(
                    "Have you measured your blood sugar after the meal? Do you feel uncomfortable?"
                )
                if mark_issued:
                    self.store.append(f"issued/{patient_id}", mark)
        return prompts

    # -- adherence ---------------------------------------------------------

    def scheduled_slots(
        self, patient_id: str, window: tuple[datetime, datetime], snapshot=None
    ) -> list[tuple[str, datetime]]:
        snap = self._snap(snapshot)
        start, end = window
        slots = []
        for schedule in self.schedules(patient_id, snap):
            if not schedule.active:
                continue
            day = start.date()
            while day <= end.date():
                for tod in schedule.times_of_day:
                    slot = datetime.combine(day, tod)
                    if start <= slot < end:
                        slots.append((schedule.med_name, slot))
                day += timedelta(days=1)
        slots.sort(key=lambda s: (s[1], s[0]))
        return slots

    def adherence(self, patient_id: str, window: tuple[datetime, datetime]) -> float:
        """Taken events / scheduled slots inside the window; 1.0 when no slots."""
        start, end = window
        if end <= start:
            raise ValidationError("adherence window must be non-empty")
        snap = self.store.snapshot()
        slots = self.scheduled_slots(patient_id, window, snap)
        if not slots:
            return 1.0
        taken = {
            (e.med_name, e.scheduled_at)
            for e in self.medication_events(patient_id, snap)
            if e.outcome == "taken"
        }
        hit = sum(1 for slot in slots if slot in taken)
        return hit / len(slots)

    # -- alerts -------------------------------------------------------------

    def open_alerts(self, patient_id: str, snapshot=None) -> dict[AlertKind, Alert]:
        """Fold the append-only alert log into the currently-open alerts."""
        snap = self._snap(snapshot)
        open_alerts: dict[AlertKind, Alert] = {}
        for action in snap.log(f"alertlog/{patient_id}"):
            kind = AlertKind(action["kind"])
            if action["action"] == "open":
                open_alerts[kind] = Alert(
                    id=action["id"],
                    patient_id=patient_id,
                    kind=kind,
                    detected_at=datetime.fromisoformat(action["detected_at"]),
                    evidence=list(action["evidence"]),
                )
            elif action["action"] == "extend" and kind in open_alerts:
                alert = open_alerts[kind]
                for ref in action["evidence"]:
                    if ref not in alert.evidence:
                        alert.evidence.append(ref)
            elif action["action"] == "close":
                open_alerts.pop(kind, None)
        return open_alerts

    def raise_alert(self, patient_id: str, kind: AlertKind, now: datetime, evidence: list[str]) -> Alert:
        """Open a new alert or extend the open one of the same kind."""
        existing = self.open_alerts(patient_id).get(kind)
        if existing is not None:
            self.store.append(
                f"alertlog/{patient_id}",
                {"action": "extend", "kind": kind.value, "evidence": evidence},
            )
            return self.open_alerts(patient_id)[kind]
        alert_id = f"{patient_id}/{kind.value}/{_iso(now)}"
        self.store.append(
            f"alertlog/{patient_id}",
            {
                "action": "open",
                "id": alert_id,
                "kind": kind.value,
                "detected_at": _iso(now),
                "evidence": evidence,
            },
        )
        return self.open_alerts(patient_id)[kind]

    def close_alert(self, patient_id: str, kind: AlertKind) -> None:
        self.store.append(f"alertlog/{patient_id}", {"action": "close", "kind": kind.value})

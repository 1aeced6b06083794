"""Care-mode rules.

Three rules, all thresholds configurable with documented defaults:
  tracking_gap        no glucose reading within the last gap_days days
  hyperglycemia       any reading in the last 24 h at or above high_mmol
  missed_medication   a run of consecutive_missed scheduled slots, each
                      at least 6 h past due, with outcome missed or no
                      event at all

"Abnormally high" applies to any reading, not only fasting ones; the
13.9 mmol/L default is the conventional severe-hyperglycemia line.
"""

from __future__ import annotations

from datetime import datetime, timedelta

from .store import HealthRecords, _iso
from .types import Alert, AlertKind, CareConfig, TAKEN_GRACE


def evaluate_care_rules(
    records: HealthRecords,
    patient_id: str,
    now: datetime,
    config: CareConfig | None = None,
) -> list[Alert]:
    """Evaluate all three rules on one snapshot; returns open alerts raised
    or extended by this evaluation (deduplicated per kind)."""
    config = config or CareConfig()
    snap = records.store.snapshot()
    raised: list[Alert] = []

    readings = records.glucose_series(patient_id, snapshot=snap)

    # rule 1: tracking gap (boundary inclusive: exactly gap_days old counts)
    gap_cutoff = now - timedelta(days=config.gap_days)
    recent = [r for r in readings if r.taken_at > gap_cutoff]
    if not recent:
        if readings:
            evidence = [f"last reading glucose/{patient_id}/{_iso(readings[-1].taken_at)}"]
        else:
            evidence = [f"glucose/{patient_id}: no readings on file"]
        raised.append(records.raise_alert(patient_id, AlertKind.TRACKING_GAP, now, evidence))

    # rule 2: hyperglycemia in the last 24 h
    day_ago = now - timedelta(hours=24)
    high = [
        r for r in readings if day_ago <= r.taken_at <= now and r.value >= config.high_mmol
    ]
    if high:
        evidence = [
            f"glucose/{patient_id}/{_iso(r.taken_at)}={r.value}" for r in high
        ]
        raised.append(records.raise_alert(patient_id, AlertKind.HYPERGLYCEMIA, now, evidence))

    # rule 3: consecutive missed medication slots past the 6 h grace
    window = (now - timedelta(days=config.lookback_days), now)
    if window[0] < window[1]:
        due_by = now - TAKEN_GRACE  # ">= 6 h past due" is inclusive
        slots = [
            (med, slot)
            for med, slot in records.scheduled_slots(patient_id, window, snap)
            if slot <= due_by
        ]
        taken = {
            (e.med_name, e.scheduled_at)
            for e in records.medication_events(patient_id, snap)
            if e.outcome == "taken"
        }
        by_med: dict[str, list[datetime]] = {}
        for med, slot in slots:
            by_med.setdefault(med, []).append(slot)
        run_evidence: list[str] = []
        for med, med_slots in sorted(by_med.items()):
            run: list[datetime] = []
            best: list[datetime] = []
            for slot in med_slots:
                if (med, slot) in taken:
                    run = []
                else:
                    run.append(slot)
                    if len(run) > len(best):
                        best = list(run)
            if len(best) >= config.consecutive_missed:
                run_evidence.extend(f"slot/{med}/{_iso(s)}" for s in best)
        if run_evidence:
            raised.append(
                records.raise_alert(patient_id, AlertKind.MISSED_MEDICATION, now, run_evidence)
            )

    return raised

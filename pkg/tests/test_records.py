import itertools
from datetime import datetime, time, timedelta

import pytest

from carebridge.errors import DuplicateError, ValidationError
from carebridge.records import (
    AlertKind,
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
    mmol_from_mgdl,
)
from carebridge.service.stores import FileStore, MemoryStore

NOW = datetime(2025, 6, 15, 12, 0)


@pytest.fixture(params=["memory", "file"])
def store(request, tmp_path):
    if request.param == "memory":
        return MemoryStore()
    return FileStore(tmp_path / "records.jsonl")


@pytest.fixture
def records(store):
    return HealthRecords(store)


def reading(value, at, context=GlucoseContext.FASTING, patient="p1"):
    return GlucoseReading(patient_id=patient, taken_at=at, value=value, context=context)


def metformin_schedule(times=(time(8, 0), time(20, 0)), patient="p1"):
    return MedicationSchedule(
        patient_id=patient,
        med_name="metformin",
        dose="500 mg",
        purpose="helps control blood sugar",
        times_of_day=times,
    )


class TestRecordValidation:
    def test_glucose_stored(self, records):
        rid = records.record(reading(7.2, NOW))
        assert rid.startswith("glucose/p1/")
        assert len(records.glucose_series("p1")) == 1

    def test_glucose_plausibility_band(self):
        with pytest.raises(ValidationError, match="plausibility"):
            reading(80.0, NOW)
        with pytest.raises(ValidationError, match="plausibility"):
            reading(0.0, NOW)

    def test_mgdl_conversion_helper(self):
        assert mmol_from_mgdl(180.16) == pytest.approx(10.0, abs=0.01)

    def test_out_of_order_arrival_reads_sorted(self, records):
        records.record(reading(8.0, NOW))
        records.record(reading(7.0, NOW - timedelta(hours=5)))
        series = records.glucose_series("p1")
        assert [r.value for r in series] == [7.0, 8.0]

    def test_medication_event_duplicate_rejected(self, records):
        slot = datetime(2025, 6, 15, 8, 0)
        records.record(MedicationEvent("p1", "metformin", slot, "taken", taken_at=slot))
        with pytest.raises(DuplicateError):
            records.record(MedicationEvent("p1", "metformin", slot, "missed"))

    def test_taken_outside_grace_rejected(self):
        slot = datetime(2025, 6, 15, 8, 0)
        with pytest.raises(ValidationError, match="6 hours"):
            MedicationEvent("p1", "metformin", slot, "taken", taken_at=slot + timedelta(hours=7))

    def test_symptom_severity_bounds(self):
        with pytest.raises(ValidationError):
            SymptomEntry("p1", NOW, SymptomCode.FATIGUE, severity=6)

    def test_schedule_times_strictly_increasing(self):
        with pytest.raises(ValidationError):
            metformin_schedule(times=(time(8, 0), time(8, 0)))

    def test_sleep_entry(self, records):
        records.record(SleepEntry("p1", NOW, hours=6.5, quality=4))
        assert records.sleep_entries("p1")[0].hours == 6.5


class TestReminders:
    def test_no_schedules(self, records):
        assert records.due_reminders("p1", NOW) == []

    def test_window_rule_includes_name_dose_purpose(self, records):
        records.record(metformin_schedule())
        msgs = records.due_reminders("p1", datetime(2025, 6, 15, 7, 50))
        assert len(msgs) == 1
        assert "metformin" in msgs[0]
        assert "500 mg" in msgs[0]
        assert "helps control blood sugar" in msgs[0]

    def test_outside_window_silent(self, records):
        records.record(metformin_schedule())
        assert records.due_reminders("p1", datetime(2025, 6, 15, 7, 30)) == []

    def test_taken_dose_not_reminded(self, records):
        records.record(metformin_schedule())
        slot = datetime(2025, 6, 15, 8, 0)
        records.record(MedicationEvent("p1", "metformin", slot, "taken", taken_at=slot))
        assert records.due_reminders("p1", datetime(2025, 6, 15, 7, 50)) == []

    def test_overlapping_ticks_idempotent(self, records):
        records.record(metformin_schedule())
        now = datetime(2025, 6, 15, 7, 50)
        assert len(records.due_reminders("p1", now)) == 1
        assert records.due_reminders("p1", now + timedelta(minutes=1)) == []

    def test_inactive_schedule_silent(self, records):
        schedule = MedicationSchedule(
            patient_id="p1", med_name="old", dose="1", purpose="x",
            times_of_day=(time(8, 0),), active=False,
        )
        records.record(schedule)
        assert records.due_reminders("p1", datetime(2025, 6, 15, 7, 50)) == []


class TestPrompts:
    def test_morning_sleep_prompt(self, records):
        prompts = records.due_prompts("p1", datetime(2025, 6, 15, 7, 0))
        assert any("sleep" in p for p in prompts)

    def test_no_sleep_prompt_if_entry_exists(self, records):
        records.record(SleepEntry("p1", datetime(2025, 6, 15, 6, 30), hours=7))
        assert records.due_prompts("p1", datetime(2025, 6, 15, 7, 0)) == []

    def test_post_meal_prompt(self, records):
        prompts = records.due_prompts("p1", datetime(2025, 6, 15, 13, 0))
        assert prompts == ["Have you measured your blood sugar after the meal? Do you feel uncomfortable?"]

    def test_no_post_meal_prompt_with_reading(self, records):
        records.record(reading(9.0, datetime(2025, 6, 15, 12, 50), GlucoseContext.POSTPRANDIAL))
        assert records.due_prompts("p1", datetime(2025, 6, 15, 13, 0)) == []

    def test_prompt_fires_once_per_window(self, records):
        now = datetime(2025, 6, 15, 13, 0)
        assert records.due_prompts("p1", now)
        assert records.due_prompts("p1", now + timedelta(minutes=10)) == []

    def test_custom_meal_times(self, records):
        records.set_meals("p1", [time(11, 0)])
        assert records.due_prompts("p1", datetime(2025, 6, 15, 12, 0)) != []
        assert records.due_prompts("p1", datetime(2025, 6, 15, 13, 0)) == []

    def test_outside_any_window(self, records):
        assert records.due_prompts("p1", datetime(2025, 6, 15, 11, 0)) == []


class TestAdherence:
    def setup_slots(self, records, taken_count, missed_count):
        records.record(metformin_schedule(times=(time(8, 0),)))
        day = datetime(2025, 6, 1, 8, 0)
        for i in range(taken_count):
            slot = day + timedelta(days=i)
            records.record(MedicationEvent("p1", "metformin", slot, "taken", taken_at=slot))
        for i in range(taken_count, taken_count + missed_count):
            slot = day + timedelta(days=i)
            records.record(MedicationEvent("p1", "metformin", slot, "missed"))

    def test_ratio(self, records):
        self.setup_slots(records, taken_count=8, missed_count=2)
        window = (datetime(2025, 6, 1), datetime(2025, 6, 11))
        assert records.adherence("p1", window) == pytest.approx(0.8)

    def test_vacuous_when_no_slots(self, records):
        assert records.adherence("p1", (datetime(2025, 6, 1), datetime(2025, 6, 11))) == 1.0

    def test_all_missed(self, records):
        self.setup_slots(records, taken_count=0, missed_count=10)
        window = (datetime(2025, 6, 1), datetime(2025, 6, 11))
        assert records.adherence("p1", window) == 0.0

    def test_monotone_in_taken_events(self, records):
        records.record(metformin_schedule(times=(time(8, 0),)))
        window = (datetime(2025, 6, 1), datetime(2025, 6, 11))
        before = records.adherence("p1", window)
        slot = datetime(2025, 6, 3, 8, 0)
        records.record(MedicationEvent("p1", "metformin", slot, "taken", taken_at=slot))
        assert records.adherence("p1", window) >= before

    def test_empty_window_rejected(self, records):
        with pytest.raises(ValidationError):
            records.adherence("p1", (NOW, NOW))


class TestCareRules:
    def test_daily_readings_no_gap(self, records):
        for d in range(7):
            records.record(reading(7.0, NOW - timedelta(days=d, hours=1)))
        alerts = evaluate_care_rules(records, "p1", NOW)
        assert all(a.kind is not AlertKind.TRACKING_GAP for a in alerts)

    def test_gap_boundary_inclusive(self, records):
        records.record(reading(7.0, NOW - timedelta(days=3)))
        alerts = evaluate_care_rules(records, "p1", NOW, CareConfig(gap_days=3))
        kinds = {a.kind for a in alerts}
        assert AlertKind.TRACKING_GAP in kinds

    def test_reading_just_inside_gap_no_alert(self, records):
        records.record(reading(7.0, NOW - timedelta(days=2, hours=23)))
        alerts = evaluate_care_rules(records, "p1", NOW, CareConfig(gap_days=3))
        assert all(a.kind is not AlertKind.TRACKING_GAP for a in alerts)

    def test_hyperglycemia_cites_reading(self, records):
        at = NOW - timedelta(hours=2)
        records.record(reading(14.2, at))
        alerts = evaluate_care_rules(records, "p1", NOW)
        hyper = [a for a in alerts if a.kind is AlertKind.HYPERGLYCEMIA]
        assert len(hyper) == 1
        assert any("14.2" in e for e in hyper[0].evidence)

    def test_high_reading_older_than_24h_ignored(self, records):
        records.record(reading(14.2, NOW - timedelta(hours=30)))
        records.record(reading(7.0, NOW - timedelta(hours=1)))
        alerts = evaluate_care_rules(records, "p1", NOW)
        assert all(a.kind is not AlertKind.HYPERGLYCEMIA for a in alerts)

    def test_missed_medication_run(self, records):
        records.record(metformin_schedule(times=(time(8, 0),)))
        records.record(reading(7.0, NOW - timedelta(hours=1)))  # avoid tracking gap
        alerts = evaluate_care_rules(records, "p1", NOW)
        missed = [a for a in alerts if a.kind is AlertKind.MISSED_MEDICATION]
        assert len(missed) == 1
        assert len(missed[0].evidence) >= 2

    def test_taken_dose_breaks_the_run(self, records):
        records.record(metformin_schedule(times=(time(8, 0),)))
        records.record(reading(7.0, NOW - timedelta(hours=1)))
        for d in range(1, 15):
            slot = datetime.combine((NOW - timedelta(days=d)).date(), time(8, 0))
            records.record(MedicationEvent("p1", "metformin", slot, "taken", taken_at=slot))
        alerts = evaluate_care_rules(records, "p1", NOW, CareConfig(consecutive_missed=2))
        assert all(a.kind is not AlertKind.MISSED_MEDICATION for a in alerts)

    def test_dedup_extends_instead_of_duplicating(self, records):
        records.record(reading(14.5, NOW - timedelta(hours=2)))
        evaluate_care_rules(records, "p1", NOW)
        records.record(reading(15.0, NOW - timedelta(hours=1)))
        evaluate_care_rules(records, "p1", NOW)
        open_alerts = records.open_alerts("p1")
        assert len([k for k in open_alerts if k is AlertKind.HYPERGLYCEMIA]) == 1
        alert = open_alerts[AlertKind.HYPERGLYCEMIA]
        assert any("14.5" in e for e in alert.evidence)
        assert any("15.0" in e for e in alert.evidence)

    def test_unchanged_data_never_duplicates(self, records):
        evaluate_care_rules(records, "p1", NOW)
        evaluate_care_rules(records, "p1", NOW)
        assert len(records.open_alerts("p1")) == 1  # just the tracking gap

    def test_invalid_config(self):
        with pytest.raises(ValidationError):
            CareConfig(gap_days=0)

    def test_non_default_thresholds(self, records):
        records.record(reading(12.0, NOW - timedelta(hours=2)))
        alerts = evaluate_care_rules(records, "p1", NOW, CareConfig(gap_days=5, high_mmol=11.0))
        kinds = {a.kind for a in alerts}
        assert AlertKind.HYPERGLYCEMIA in kinds
        assert AlertKind.TRACKING_GAP not in kinds

    def test_close_alert(self, records):
        records.record(reading(14.5, NOW - timedelta(hours=2)))
        evaluate_care_rules(records, "p1", NOW)
        records.close_alert("p1", AlertKind.HYPERGLYCEMIA)
        assert AlertKind.HYPERGLYCEMIA not in records.open_alerts("p1")

    def test_exhaustive_small_grid_oracle(self, records):
        """Brute-force scenario oracle on a reduced grid (the full 14-day grid
        runs in the acceptance suite)."""
        now = datetime(2025, 6, 15, 20, 0)
        for pattern_bits in range(2 ** 6):
            pattern = [(pattern_bits >> d) & 1 for d in range(6)]
            for gap_days in (1, 2, 3):
                store = MemoryStore()
                recs = HealthRecords(store)
                for d, has_reading in enumerate(pattern):
                    if has_reading:
                        at = now - timedelta(days=d, hours=1)
                        recs.record(reading(7.0, at))
                alerts = evaluate_care_rules(recs, "p1", now, CareConfig(gap_days=gap_days))
                kinds = {a.kind for a in alerts}
                # oracle: a gap iff no reading strictly newer than the cutoff
                newest = min(
                    (d for d, has in enumerate(pattern) if has), default=None
                )
                has_recent = newest is not None and (
                    (now - (now - timedelta(days=newest, hours=1)))
                    < timedelta(days=gap_days)
                )
                assert (AlertKind.TRACKING_GAP in kinds) == (not has_recent), (
                    pattern,
                    gap_days,
                )

"""Daily tracking: records, reminders, prompts, adherence, care alerts.

Run: python3 demos/04_daily_tracking.py
"""

from datetime import datetime, time, timedelta

from carebridge.access import AccessController, Principal, Role, Scope
from carebridge.records import (
    CareConfig,
    GlucoseContext,
    GlucoseReading,
    HealthRecords,
    MedicationEvent,
    MedicationSchedule,
    evaluate_care_rules,
)
from carebridge.service.stores import MemoryStore

records = HealthRecords(MemoryStore())
now = datetime(2025, 6, 15, 7, 50)

records.record(
    MedicationSchedule(
        patient_id="p1", med_name="metformin", dose="500 mg",
        purpose="helps control blood sugar", times_of_day=(time(8, 0), time(20, 0)),
    )
)
print("reminders at 07:50 ->", records.due_reminders("p1", now))
print("prompts at 07:50   ->", records.due_prompts("p1", now))

# record a week of readings and a couple of doses
for d in range(7):
    at = now - timedelta(days=d, hours=1)
    records.record(GlucoseReading("p1", at, 6.8 + 0.2 * d, GlucoseContext.FASTING))
slot = datetime(2025, 6, 14, 8, 0)
records.record(MedicationEvent("p1", "metformin", slot, "taken", taken_at=slot))

window = (datetime(2025, 6, 8), datetime(2025, 6, 15))
print(f"adherence over the last week: {records.adherence('p1', window):.2f}")

# a dangerous reading trips the care rules; alerts route to the family
records.record(GlucoseReading("p1", datetime(2025, 6, 15, 6, 0), 14.6, GlucoseContext.RANDOM))
alerts = evaluate_care_rules(records, "p1", datetime(2025, 6, 15, 8, 0), CareConfig())
acl = AccessController()
acl.register(Principal("p1", Role.PATIENT))
acl.register(Principal("daughter", Role.FAMILY_VIEWER))
acl.grant("p1", "p1", "daughter", {Scope.ALERTS, Scope.GLUCOSE_TRENDS})
for alert in alerts:
    intents = acl.route_alert(alert)
    print(f"alert {alert.kind.value}: evidence={alert.evidence[:1]} -> notified {[i.recipient_id for i in intents]}")

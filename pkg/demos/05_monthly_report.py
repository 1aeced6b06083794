"""Build the scripted demo month and print its report.

Run: python3 demos/05_monthly_report.py
"""

from datetime import datetime

from carebridge.demo import DEMO_PATIENT, build_demo_month, demo_knowledge_gaps, demo_utterances
from carebridge.records import HealthRecords
from carebridge.reporting import Period, build_monthly_report, serialize_report
from carebridge.service.stores import MemoryStore

records = HealthRecords(MemoryStore())
period = Period(2025, 6)
build_demo_month(records)

report = build_monthly_report(
    DEMO_PATIENT,
    period,
    records,
    utterances=demo_utterances(period),
    knowledge_gaps=demo_knowledge_gaps(),
    now=datetime(2025, 7, 2),
)

print(f"period {report.period.label} for {report.patient_id}")
g = report.glucose
print(f"glucose: n={g.n} mean={g.mean:.2f} sd={g.sd:.2f} slope={g.slope:+.3f}/day TIR={g.time_in_range:.1%}")
print(f"adherence: {report.adherence:.1%}")
print(f"symptoms: {report.symptom_frequency}")
print(f"knowledge gaps: {report.knowledge_gaps}")
print(f"sentiment: { {k: round(v, 2) for k, v in report.sentiment.distribution.items()} }")
print(f"open alerts: {[a['kind'] for a in report.open_alerts]}")
print(f"timeline entries: {len(report.chronological)} "
      f"(thematic: { {k: len(v) for k, v in report.thematic.items()} })")

print("\nfirst 400 bytes of the stable serialization:")
print(serialize_report(report)[:400])

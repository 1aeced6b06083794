"""Composition root: wires every module behind the service surface.

The API layer stays thin; anything with business meaning lives in the
owning module and is reached through this object.
"""

from __future__ import annotations

from datetime import datetime, time, timedelta
from pathlib import Path

from ..access import AccessController, Principal, Role, Scope
from ..dialogue import (
    AssessmentState,
    GlucoseSummary,
    PatientContext,
    QuestionBank,
    TemplateGenerator,
    fixture_bank,
    load_bank,
)
from ..errors import ConfigError
from ..knowledge import GraphStore, VectorIndex, fixture_graph, load_graph
from ..records import CareConfig, HealthRecords, evaluate_care_rules
from ..reporting import (
    InteractionEvent,
    LexiconSentimentClassifier,
    Period,
    build_monthly_report,
)
from ..transcripts import SessionManager
from .auth import TokenService
from .config import Config
from .events import EventLog
from .stores import FileStore, MemoryStore, StoreAdapter


class Platform:
    def __init__(self, config: Config | None = None, store: StoreAdapter | None = None):
        self.config = config or Config()
        self.store = store if store is not None else self._build_store()
        self.graph_store = GraphStore(self._load_graph())
        self.bank: QuestionBank = self._load_bank()
        self.acl = AccessController()
        self.tokens = TokenService(
            secret=self.config.get("auth.secret"),
            ttl_s=self.config.get_int("auth.token_ttl_s"),
        )
        meals = tuple(
            time.fromisoformat(t) for t in self.config.meal_times()
        )
        self.records = HealthRecords(
            self.store,
            meals=meals,
            reminder_window=timedelta(minutes=self.config.get_int("reminder.window_min")),
        )
        self.care_config = CareConfig(
            gap_days=self.config.get_float("care.gap_days"),
            high_mmol=self.config.get_float("care.high_mmol"),
            consecutive_missed=self.config.get_int("care.consecutive_missed"),
        )
        self.events = EventLog()
        self.sessions = SessionManager(
            self.graph_store.current(),
            participant_exists=self.acl.exists,
            event_sink=lambda e: self.events.append(
                f"session/{e.session_id}", e.type, e.payload, seq=e.seq
            ),
        )
        self.generator = TemplateGenerator()
        self.classifier = LexiconSentimentClassifier()
        self.generator_timeout_s = self.config.get_float("generator.timeout_s")
        self.qa_min_score = self.config.get_float("qa.min_score")
        self.assessments: dict[str, AssessmentState] = {}
        self.interactions: list[InteractionEvent] = []
        self.utterances: dict[str, list[tuple[datetime, str]]] = {}
        self._index: VectorIndex | None = None
        self._index_version = -1

    # -- wiring helpers ----------------------------------------------------

    def _build_store(self) -> StoreAdapter:
        kind = self.config.get("store.kind")
        if kind == "memory":
            return MemoryStore()
        if kind == "file":
            return FileStore(self.config.get("store.path"))
        raise ConfigError(f"unknown store.kind {kind!r}")

    def _load_graph(self):
        path = self.config.get("graph.path")
        if not path:
            return fixture_graph()
        p = Path(path)
        if not p.exists():
            raise ConfigError(f"graph file not found: {path}")
        with p.open("r", encoding="utf-8") as fh:
            return load_graph(fh)

    def _load_bank(self) -> QuestionBank:
        path = self.config.get("bank.path")
        if not path:
            return fixture_bank()
        p = Path(path)
        if not p.exists():
            raise ConfigError(f"question bank file not found: {path}")
        with p.open("r", encoding="utf-8") as fh:
            return load_bank(fh)

    @property
    def graph(self):
        return self.graph_store.current()

    def vector_index(self) -> VectorIndex:
        """Cosine index over the current graph snapshot, rebuilt on version bumps."""
        graph = self.graph
        if self._index is None or self._index_version != graph.version:
            self._index = VectorIndex.from_graph(graph)
            self._index_version = graph.version
        return self._index

    # -- principals ----------------------------------------------------------

    def register_principal(self, principal_id: str, role: Role, password: str) -> Principal:
        principal = self.acl.register(Principal(principal_id, role))
        self.tokens.set_password(principal_id, password)
        return principal

    # -- QA plumbing -----------------------------------------------------------

    def patient_context(self, patient_id: str) -> PatientContext:
        snapshot = self.store.snapshot()
        meds = tuple(
            s.med_name for s in self.records.schedules(patient_id, snapshot) if s.active
        )
        series = self.records.glucose_series(patient_id, snapshot=snapshot)
        recent = None
        if series:
            last_two_weeks = [r for r in series if r.taken_at >= series[-1].taken_at - timedelta(days=14)]
            mean = sum(r.value for r in last_two_weeks) / len(last_two_weeks)
            recent = GlucoseSummary(mean=round(mean, 2), latest=series[-1].value)
        return PatientContext(patient_id=patient_id, medications=meds, recent_glucose=recent)

    def log_interaction(self, event: InteractionEvent) -> None:
        self.interactions.append(event)

    def note_utterance(self, patient_id: str, at: datetime, text: str) -> None:
        self.utterances.setdefault(patient_id, []).append((at, text))

    # -- care evaluation ----------------------------------------------------------

    def evaluate_care(self, patient_id: str, now: datetime):
        """Run the rules, route fresh alerts, emit alert frames + intents."""
        alerts = evaluate_care_rules(self.records, patient_id, now, self.care_config)
        routed = []
        for alert in alerts:
            intents = self.acl.route_alert(alert, now)
            self.events.append(
                f"alerts/{patient_id}",
                "alert",
                {
                    "alert_id": alert.id,
                    "kind": alert.kind.value,
                    "evidence": list(alert.evidence),
                    "recipients": [i.recipient_id for i in intents],
                },
            )
            routed.append((alert, intents))
        return routed

    # -- reporting ----------------------------------------------------------------

    def monthly_report(self, patient_id: str, period: Period, now=None, force_preview=False):
        gaps: list[tuple[str, int]] = []
        for state in self.assessments.values():
            if state.patient_id == patient_id and state.status.value == "done":
                from ..dialogue import knowledge_gaps

                gaps = [(t.value, d) for t, d in knowledge_gaps(state)]
        return build_monthly_report(
            patient_id,
            period,
            self.records,
            utterances=self.utterances.get(patient_id, []),
            knowledge_gaps=gaps,
            sessions=self.sessions.sessions_for_patient(patient_id),
            classifier=self.classifier,
            now=now,
            force_preview=force_preview,
        )

    # -- lifecycle ------------------------------------------------------------------

    def shutdown(self) -> None:
        self.sessions.close_all_live()


def seed_demo_principals(platform: Platform) -> None:
    from ..demo import DEMO_FAMILY, DEMO_PATIENT, DEMO_PHYSICIAN

    platform.register_principal(DEMO_PATIENT, Role.PATIENT, "demo")
    platform.register_principal(DEMO_PHYSICIAN, Role.PHYSICIAN, "demo")
    platform.register_principal(DEMO_FAMILY, Role.FAMILY_VIEWER, "demo")
    platform.acl.assign_physician(DEMO_PATIENT, DEMO_PHYSICIAN)

"""HTTP and WebSocket surface.

Every data read passes through `authorize` (the single check_access
chokepoint); handlers delegate to the owning modules and carry no
business logic of their own. Module errors map onto a closed set of
error codes.
"""

from __future__ import annotations

import asyncio
from contextlib import asynccontextmanager
from datetime import datetime, timedelta
from typing import Any

from fastapi import Depends, FastAPI, Header, Query, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .. import __version__
from ..access import Scope
from ..dialogue import (
    answer_question,
    knowledge_gaps,
    next_question,
    record_response,
    start_assessment,
    summarize_assessment,
)
from ..errors import (
    AccessDeniedError,
    CarebridgeError,
    ConfigError,
    DuplicateError,
    NotFoundError,
    ParseError,
    StateError,
    ValidationError,
)
from ..knowledge import explain_term, find_terms
from ..records import (
    GlucoseContext,
    GlucoseReading,
    MedicationEvent,
    MedicationSchedule,
    SleepEntry,
    SymptomCode,
    SymptomEntry,
)
from ..reporting import InteractionEvent, Period, aggregate_feedback
from ..reporting.monthly import report_document
from ..transcripts import AudioChunk
from .platform import Platform

_STATUS = {
    ValidationError: 400,
    ParseError: 400,
    NotFoundError: 404,
    DuplicateError: 409,
    StateError: 409,
    AccessDeniedError: 403,
    ConfigError: 500,
}

_WS_POLL_S = 0.02


class LoginBody(BaseModel):
    principal_id: str
    password: str


class GlucoseBody(BaseModel):
    taken_at: datetime
    value: float
    context: str = "random"


class MedicationEventBody(BaseModel):
    med_name: str
    scheduled_at: datetime
    outcome: str
    taken_at: datetime | None = None


class ScheduleBody(BaseModel):
    med_name: str
    dose: str
    purpose: str
    times_of_day: list[str]
    active: bool = True


class SymptomBody(BaseModel):
    at: datetime
    code: str
    severity: int
    note: str = ""


class SleepBody(BaseModel):
    at: datetime
    hours: float
    quality: int = 3
    note: str = ""


class GrantBody(BaseModel):
    grantee_id: str
    scopes: list[str]
    expires_at: datetime | None = None


class SessionBody(BaseModel):
    patient_id: str
    physician_id: str


class ChunkBody(BaseModel):
    seq: int
    offset_ms: int = 0
    payload_text: str
    dialect_hint: str | None = None


class ResponseBody(BaseModel):
    item_id: str
    response: str


class QABody(BaseModel):
    patient_id: str
    question: str
    asked_at: datetime | None = None


class ProposalBody(BaseModel):
    kind: str
    payload: dict[str, Any]
    note: str = ""


def build_app(platform: Platform) -> FastAPI:
    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        platform.shutdown()  # drain: auto-close live sessions

    app = FastAPI(title="carebridge", version=__version__, lifespan=lifespan)
    app.state.platform = platform

    @app.exception_handler(CarebridgeError)
    async def carebridge_error(request, exc: CarebridgeError):
        status = _STATUS.get(type(exc), 500)
        return JSONResponse(
            status_code=status, content={"error": {"code": exc.code, "message": str(exc)}}
        )

    def current_principal(authorization: str = Header(default="")) -> str:
        scheme, _, token = authorization.partition(" ")
        if scheme.lower() != "bearer" or not token:
            raise AccessDeniedError("missing bearer token")
        return platform.tokens.verify(token)

    def authorize(principal: str, patient_id: str, scope: Scope) -> None:
        decision = platform.acl.check_access(principal, patient_id, scope)
        if not decision:
            raise AccessDeniedError(f"access denied ({decision.reason})")

    # -- health and auth -------------------------------------------------

    @app.get("/health")
    def health():
        return {
            "status": "ok",
            "version": __version__,
            "graph_version": platform.graph.version,
            "graph_nodes": len(platform.graph.nodes),
        }

    @app.post("/auth/login")
    def login(body: LoginBody):
        return {"token": platform.tokens.authenticate(body.principal_id, body.password)}

    # -- records ------------------------------------------------------------

    @app.post("/patients/{patient_id}/glucose", status_code=201)
    def post_glucose(patient_id: str, body: GlucoseBody, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.GLUCOSE_TRENDS)
        reading = GlucoseReading(
            patient_id=patient_id,
            taken_at=body.taken_at,
            value=body.value,
            context=GlucoseContext(body.context),
        )
        return {"id": platform.records.record(reading)}

    @app.get("/patients/{patient_id}/glucose")
    def get_glucose(
        patient_id: str,
        start: datetime | None = None,
        end: datetime | None = None,
        principal=Depends(current_principal),
    ):
        authorize(principal, patient_id, Scope.GLUCOSE_TRENDS)
        window = (start, end) if start and end else None
        series = platform.records.glucose_series(patient_id, window)
        return [
            {"taken_at": r.taken_at.isoformat(), "value": r.value, "context": r.context.value}
            for r in series
        ]

    @app.post("/patients/{patient_id}/schedules", status_code=201)
    def post_schedule(patient_id: str, body: ScheduleBody, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.MEDICATION_STATUS)
        from datetime import time as dtime

        schedule = MedicationSchedule(
            patient_id=patient_id,
            med_name=body.med_name,
            dose=body.dose,
            purpose=body.purpose,
            times_of_day=tuple(dtime.fromisoformat(t) for t in body.times_of_day),
            active=body.active,
        )
        return {"id": platform.records.record(schedule)}

    @app.get("/patients/{patient_id}/schedules")
    def get_schedules(patient_id: str, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.MEDICATION_STATUS)
        return {
            "schedules": [
                {
                    "med_name": s.med_name,
                    "dose": s.dose,
                    "purpose": s.purpose,
                    "times_of_day": [t.strftime("%H:%M") for t in s.times_of_day],
                    "active": s.active,
                }
                for s in platform.records.schedules(patient_id)
            ]
        }

    @app.post("/patients/{patient_id}/medication-events", status_code=201)
    def post_medication_event(
        patient_id: str, body: MedicationEventBody, principal=Depends(current_principal)
    ):
        authorize(principal, patient_id, Scope.MEDICATION_STATUS)
        event = MedicationEvent(
            patient_id=patient_id,
            med_name=body.med_name,
            scheduled_at=body.scheduled_at,
            outcome=body.outcome,
            taken_at=body.taken_at,
        )
        return {"id": platform.records.record(event)}

    @app.post("/patients/{patient_id}/symptoms", status_code=201)
    def post_symptom(patient_id: str, body: SymptomBody, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.MEDICATION_STATUS)
        entry = SymptomEntry(
            patient_id=patient_id, at=body.at, code=SymptomCode(body.code),
            severity=body.severity, note=body.note,
        )
        return {"id": platform.records.record(entry)}

    @app.post("/patients/{patient_id}/sleep", status_code=201)
    def post_sleep(patient_id: str, body: SleepBody, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.MEDICATION_STATUS)
        entry = SleepEntry(
            patient_id=patient_id, at=body.at, hours=body.hours,
            quality=body.quality, note=body.note,
        )
        return {"id": platform.records.record(entry)}

    @app.get("/patients/{patient_id}/reminders")
    def get_reminders(patient_id: str, now: datetime, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.MEDICATION_STATUS)
        messages = platform.records.due_reminders(patient_id, now)
        for message in messages:
            platform.events.append(f"alerts/{patient_id}", "reminder", {"message": message})
        return {"reminders": messages}

    @app.get("/patients/{patient_id}/prompts")
    def get_prompts(patient_id: str, now: datetime, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.MEDICATION_STATUS)
        prompts = platform.records.due_prompts(patient_id, now)
        for prompt in prompts:
            platform.events.append(f"alerts/{patient_id}", "prompt", {"message": prompt})
        return {"prompts": prompts}

    @app.get("/patients/{patient_id}/adherence")
    def get_adherence(
        patient_id: str, start: datetime, end: datetime, principal=Depends(current_principal)
    ):
        authorize(principal, patient_id, Scope.MEDICATION_STATUS)
        return {"adherence": platform.records.adherence(patient_id, (start, end))}

    @app.post("/patients/{patient_id}/care/evaluate")
    def evaluate_care(patient_id: str, now: datetime, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.ALERTS)
        routed = platform.evaluate_care(patient_id, now)
        return {
            "alerts": [
                {
                    "id": alert.id,
                    "kind": alert.kind.value,
                    "evidence": alert.evidence,
                    "intents": [
                        {"recipient_id": i.recipient_id, "channel": i.channel} for i in intents
                    ],
                }
                for alert, intents in routed
            ]
        }

    @app.get("/patients/{patient_id}/alerts")
    def get_alerts(patient_id: str, principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.ALERTS)
        alerts = platform.records.open_alerts(patient_id)
        return {
            "alerts": [
                {"id": a.id, "kind": k.value, "evidence": a.evidence}
                for k, a in alerts.items()
            ]
        }

    # -- grants ----------------------------------------------------------------

    @app.post("/patients/{patient_id}/grants", status_code=201)
    def post_grant(patient_id: str, body: GrantBody, principal=Depends(current_principal)):
        grant = platform.acl.grant(
            caller_id=principal,
            patient_id=patient_id,
            grantee_id=body.grantee_id,
            scopes={Scope(s) for s in body.scopes},
            expires_at=body.expires_at,
        )
        return {
            "patient_id": grant.patient_id,
            "grantee_id": grant.grantee_id,
            "scopes": sorted(s.value for s in grant.scopes),
        }

    @app.delete("/patients/{patient_id}/grants/{grantee_id}")
    def delete_grant(patient_id: str, grantee_id: str, principal=Depends(current_principal)):
        platform.acl.revoke(principal, patient_id, grantee_id)
        return {"revoked": grantee_id}

    @app.get("/patients/{patient_id}/grants")
    def list_grants(patient_id: str, principal=Depends(current_principal)):
        if principal != patient_id:
            raise AccessDeniedError("only the patient sees their grant list")
        return {
            "grants": [
                {
                    "grantee_id": g.grantee_id,
                    "scopes": sorted(s.value for s in g.scopes),
                    "expires_at": g.expires_at.isoformat() if g.expires_at else None,
                }
                for g in platform.acl.grants_for(patient_id)
            ]
        }

    @app.get("/patients/{patient_id}/scopes")
    def my_scopes(patient_id: str, principal=Depends(current_principal)):
        allowed = [
            s.value for s in Scope if platform.acl.check_access(principal, patient_id, s)
        ]
        return {"scopes": allowed}

    # -- sessions ------------------------------------------------------------------

    @app.post("/sessions", status_code=201)
    def open_session(body: SessionBody, principal=Depends(current_principal)):
        if principal not in (body.patient_id, body.physician_id):
            raise AccessDeniedError("sessions are opened by a participant")
        session = platform.sessions.open_session(body.patient_id, body.physician_id)
        return {"id": session.id, "state": session.state.value}

    @app.post("/sessions/{session_id}/chunks")
    def ingest_chunk(session_id: str, body: ChunkBody, principal=Depends(current_principal)):
        session = platform.sessions.get(session_id)
        if principal not in (session.patient_id, session.physician_id):
            raise AccessDeniedError("only participants stream audio")
        chunk = AudioChunk(
            session_id=session_id,
            seq=body.seq,
            captured_at=session.opened_at + timedelta(milliseconds=body.offset_ms),
            payload=body.payload_text.encode("utf-8"),
            dialect_hint=body.dialect_hint,
        )
        events = platform.sessions.ingest_chunk(chunk)
        return {"events": [e.seq for e in events]}

    @app.post("/sessions/{session_id}/close")
    def close_session(session_id: str, principal=Depends(current_principal)):
        session = platform.sessions.get(session_id)
        if principal not in (session.patient_id, session.physician_id):
            raise AccessDeniedError("only participants close a session")
        closed = platform.sessions.close_session(session_id)
        return {"id": closed.id, "state": closed.state.value}

    @app.get("/sessions/{session_id}/transcript")
    def transcript(session_id: str, principal=Depends(current_principal)):
        session = platform.sessions.get(session_id)
        authorize(principal, session.patient_id, Scope.CONSULTATION_HISTORY)
        segments, sidebar = platform.sessions.session_transcript(session_id)
        return {
            "segments": [
                {
                    "seq": s.seq,
                    "speaker": s.speaker.value,
                    "text": s.text,
                    "start_ms": s.start_ms,
                    "end_ms": s.end_ms,
                    "final": s.final,
                }
                for s in segments
            ],
            "sidebar": sidebar,
        }

    # -- terms ---------------------------------------------------------------------

    @app.get("/terms/{node_id}")
    def term_detail(node_id: str, principal=Depends(current_principal)):
        record = explain_term(node_id, platform.graph)
        platform.log_interaction(
            InteractionEvent(datetime.now(), principal, "explain_request", node_id=node_id)
        )
        return {
            "node_id": node_id,
            "canonical_name": record.canonical_name,
            "lay_explanation": record.lay_explanation,
            "disambiguation_cues": list(record.disambiguation_cues),
            "related": [[rel.value, other] for rel, other in record.related],
        }

    @app.get("/terms")
    def term_search(query: str, principal=Depends(current_principal)):
        matches = find_terms(query, platform.graph)
        return {
            "matches": [
                {"node_id": m.node_id, "start": m.start, "end": m.end, "surface": m.matched_surface}
                for m in matches
            ]
        }

    # -- assessments ------------------------------------------------------------------

    @app.post("/assessments", status_code=201)
    def start(body: QABody, principal=Depends(current_principal)):
        if principal != body.patient_id:
            raise AccessDeniedError("patients run their own assessments")
        state = start_assessment(platform.patient_context(body.patient_id), platform.bank)
        assessment_id = f"a-{len(platform.assessments) + 1:04d}"
        platform.assessments[assessment_id] = state
        return {"id": assessment_id, "level": state.current_level}

    def _assessment(assessment_id: str):
        state = platform.assessments.get(assessment_id)
        if state is None:
            raise NotFoundError(f"unknown assessment {assessment_id!r}")
        return state

    @app.get("/assessments/{assessment_id}/next")
    def next_item(assessment_id: str, principal=Depends(current_principal)):
        state = _assessment(assessment_id)
        if principal != state.patient_id:
            raise AccessDeniedError("patients run their own assessments")
        item = next_question(state, platform.bank)
        if item is None:
            return {"done": True}
        return {
            "done": False,
            "item": {
                "id": item.id,
                "text": item.text,
                "topic": item.topic.value,
                "difficulty": item.difficulty,
                "options": list(item.answer_key.options),
                "kind": item.answer_key.kind,
            },
        }

    @app.post("/assessments/{assessment_id}/responses")
    def respond(assessment_id: str, body: ResponseBody, principal=Depends(current_principal)):
        state = _assessment(assessment_id)
        if principal != state.patient_id:
            raise AccessDeniedError("patients run their own assessments")
        record_response(state, body.item_id, body.response, platform.bank)
        asked = state.asked[-1]
        if asked.correct is None:
            platform.note_utterance(state.patient_id, datetime.now(), body.response)
        return {"level": state.current_level, "asked": len(state.asked)}

    @app.get("/assessments/{assessment_id}/gaps")
    def gaps(assessment_id: str, principal=Depends(current_principal)):
        state = _assessment(assessment_id)
        authorize(principal, state.patient_id, Scope.REPORTS)
        return {"gaps": [[t.value, d] for t, d in knowledge_gaps(state)]}

    @app.get("/assessments/{assessment_id}/summary")
    def summary(assessment_id: str, principal=Depends(current_principal)):
        state = _assessment(assessment_id)
        authorize(principal, state.patient_id, Scope.REPORTS)
        free_text = platform.utterances.get(state.patient_id, [])
        doc = summarize_assessment(
            state, free_text, platform.generator, platform.generator_timeout_s
        )
        return {
            "patient_id": doc.patient_id,
            "chief_complaint_timeline": [[at.isoformat(), text] for at, text in doc.chief_complaint_timeline],
            "concerns": doc.concerns,
            "key_questions": doc.key_questions,
            "emotional_behavioral_patterns": doc.emotional_behavioral_patterns,
            "attention_flags": doc.attention_flags,
            "degraded": doc.degraded,
        }

    # -- Q&A -----------------------------------------------------------------------

    @app.post("/qa")
    def qa(body: QABody, principal=Depends(current_principal)):
        authorize(principal, body.patient_id, Scope.CONSULTATION_HISTORY)
        context = platform.patient_context(body.patient_id)
        asked_at = body.asked_at or datetime.now()
        platform.log_interaction(
            InteractionEvent(asked_at, body.patient_id, "question", text=body.question)
        )
        platform.note_utterance(body.patient_id, asked_at, body.question)
        response = answer_question(
            body.question,
            context,
            platform.graph,
            platform.vector_index(),
            platform.generator,
            min_score=platform.qa_min_score,
            timeout_s=platform.generator_timeout_s,
        )
        return {
            "kind": response.kind.value,
            "text": response.text,
            "citations": list(response.citations),
            "retrieval_score": response.retrieval_score,
        }

    # -- reports and feedback ---------------------------------------------------------

    @app.get("/patients/{patient_id}/reports/{month}")
    def monthly_report(patient_id: str, month: str, preview: bool = False,
                       principal=Depends(current_principal)):
        authorize(principal, patient_id, Scope.REPORTS)
        period = Period.parse(month)
        report = platform.monthly_report(patient_id, period, force_preview=preview)
        return report_document(report)

    @app.get("/feedback/{month}")
    def feedback(month: str, principal=Depends(current_principal)):
        if platform.acl.principal(principal).role.value != "physician":
            raise AccessDeniedError("feedback aggregates are physician-only")
        period = Period.parse(month)
        aggregate, proposals = aggregate_feedback(
            platform.interactions, period, graph_store=platform.graph_store
        )
        return {
            "period": aggregate.period.label,
            "top_questions": aggregate.top_questions,
            "misunderstood_terms": aggregate.misunderstood_terms,
            "dialect_issue_count": aggregate.dialect_issue_count,
            "proposals": [p.id for p in proposals],
        }

    @app.get("/review/pending")
    def review_pending(principal=Depends(current_principal)):
        if platform.acl.principal(principal).role.value != "physician":
            raise AccessDeniedError("the review queue is physician-only")
        return {
            "pending": [
                {"id": p.id, "kind": p.kind.value, "payload": p.payload, "note": p.note}
                for p in platform.graph_store.pending()
            ]
        }

    @app.post("/review/propose", status_code=201)
    def review_propose(body: ProposalBody, principal=Depends(current_principal)):
        record = platform.graph_store.propose_update(body.kind, body.payload, body.note)
        return {"id": record.id, "status": record.status.value}

    @app.post("/review/{update_id}/approve")
    def review_approve(update_id: int, principal=Depends(current_principal)):
        if platform.acl.principal(principal).role.value != "physician":
            raise AccessDeniedError("approvals are physician-only")
        graph = platform.graph_store.approve(update_id)
        platform.sessions.graph = graph  # new snapshot for future annotation
        return {"graph_version": graph.version}

    # -- event streams ------------------------------------------------------------------

    async def _stream(websocket: WebSocket, stream: str, from_seq: int) -> None:
        await websocket.accept()
        last = from_seq
        try:
            while True:
                for frame in platform.events.read_from(stream, last):
                    await websocket.send_json(frame.as_wire())
                    last = frame.seq
                await asyncio.sleep(_WS_POLL_S)
        except (WebSocketDisconnect, RuntimeError):
            return

    @app.websocket("/ws/sessions/{session_id}")
    async def ws_session(
        websocket: WebSocket,
        session_id: str,
        token: str = Query(default=""),
        from_seq: int = Query(default=0),
    ):
        try:
            principal = platform.tokens.verify(token)
            session = platform.sessions.get(session_id)
            decision = platform.acl.check_access(
                principal, session.patient_id, Scope.CONSULTATION_HISTORY
            )
            if not decision:
                raise AccessDeniedError(decision.reason)
        except CarebridgeError as exc:
            await websocket.accept()
            await websocket.send_json({"type": "error", "payload": {"message": str(exc)}})
            await websocket.close(code=4403)
            return
        await _stream(websocket, f"session/{session_id}", from_seq)

    @app.websocket("/ws/patients/{patient_id}/alerts")
    async def ws_alerts(
        websocket: WebSocket,
        patient_id: str,
        token: str = Query(default=""),
        from_seq: int = Query(default=0),
    ):
        try:
            principal = platform.tokens.verify(token)
            decision = platform.acl.check_access(principal, patient_id, Scope.ALERTS)
            if not decision:
                raise AccessDeniedError(decision.reason)
        except CarebridgeError as exc:
            await websocket.accept()
            await websocket.send_json({"type": "error", "payload": {"message": str(exc)}})
            await websocket.close(code=4403)
            return
        await _stream(websocket, f"alerts/{patient_id}", from_seq)

    return app

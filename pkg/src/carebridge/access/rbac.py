"""Patient-managed role-based access control.

Default deny. A family member sees exactly the scopes the patient granted,
nothing else; the treating physician implicitly reads the clinical scopes
(never alerts); the patient always reads their own data. Every grant,
revoke and denied check writes one audit line:

    ts<TAB>op<TAB>principal<TAB>patient<TAB>scope<TAB>result
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Callable

from ..errors import AccessDeniedError, NotFoundError, ValidationError
from ..records.types import Alert


class Role(str, Enum):
    PATIENT = "patient"
    PHYSICIAN = "physician"
    FAMILY_VIEWER = "family_viewer"


class Scope(str, Enum):
    MEDICATION_STATUS = "medication_status"
    GLUCOSE_TRENDS = "glucose_trends"
    CONSULTATION_HISTORY = "consultation_history"
    REPORTS = "reports"
    ALERTS = "alerts"


# what a treating physician may read without an explicit grant
PHYSICIAN_IMPLICIT_SCOPES = frozenset(
    {Scope.CONSULTATION_HISTORY, Scope.REPORTS, Scope.MEDICATION_STATUS, Scope.GLUCOSE_TRENDS}
)


@dataclass(frozen=True)
class Principal:
    id: str
    role: Role
    display_name: str = ""


@dataclass(frozen=True)
class Grant:
    patient_id: str
    grantee_id: str
    scopes: frozenset[Scope]
    expires_at: datetime | None = None

    def __post_init__(self):
        if not self.scopes:
            raise ValidationError("grants need at least one scope")

    def expired(self, now: datetime) -> bool:
        return self.expires_at is not None and now >= self.expires_at


@dataclass(frozen=True)
class AccessDecision:
    allowed: bool
    reason: str = ""

    def __bool__(self):
        return self.allowed


@dataclass(frozen=True)
class NotificationIntent:
    recipient_id: str
    alert_id: str
    channel: str  # push | in_app
    created_at: datetime


class AccessController:
    def __init__(
        self,
        audit_path: str | Path | None = None,
        clock: Callable[[], datetime] = datetime.now,
    ):
        self._principals: dict[str, Principal] = {}
        self._grants: dict[tuple[str, str], Grant] = {}
        self._treating: dict[str, str] = {}  # patient -> physician
        self._lock = threading.Lock()
        self._clock = clock
        self.audit_lines: list[str] = []
        self._audit_path = Path(audit_path) if audit_path else None

    # -- directory -------------------------------------------------------

    def register(self, principal: Principal) -> Principal:
        with self._lock:
            self._principals[principal.id] = principal
        return principal

    def principal(self, principal_id: str) -> Principal:
        try:
            return self._principals[principal_id]
        except KeyError:
            raise NotFoundError(f"unknown principal {principal_id!r}") from None

    def exists(self, principal_id: str) -> bool:
        return principal_id in self._principals

    def assign_physician(self, patient_id: str, physician_id: str) -> None:
        self.principal(patient_id)
        self.principal(physician_id)
        with self._lock:
            self._treating[patient_id] = physician_id

    def treating_physician(self, patient_id: str) -> str | None:
        return self._treating.get(patient_id)

    # -- audit -------------------------------------------------------------

    def _audit(self, op: str, principal: str, patient: str, scope: str, result: str) -> None:
        line = "\t".join([self._clock().isoformat(timespec="seconds"), op, principal, patient, scope, result])
        self.audit_lines.append(line)
        if self._audit_path is not None:
            with self._audit_path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    # -- grants --------------------------------------------------------------

    def grant(
        self,
        caller_id: str,
        patient_id: str,
        grantee_id: str,
        scopes: set[Scope],
        expires_at: datetime | None = None,
    ) -> Grant:
        """Store a grant; a re-grant for the same pair replaces the old scopes.

        Only the patient may grant; the treating physician may share reports
        and nothing else.
        """
        self.principal(grantee_id)
        scopes = frozenset(Scope(s) for s in scopes)
        if caller_id != patient_id:
            physician_sharing_reports = (
                self._treating.get(patient_id) == caller_id and scopes == {Scope.REPORTS}
            )
            if not physician_sharing_reports:
                self._audit("grant", caller_id, patient_id, ",".join(sorted(s.value for s in scopes)), "denied")
                raise AccessDeniedError("only the patient may manage grants")
        grant = Grant(patient_id=patient_id, grantee_id=grantee_id, scopes=scopes, expires_at=expires_at)
        with self._lock:
            self._grants[(patient_id, grantee_id)] = grant
        self._audit("grant", caller_id, patient_id, ",".join(sorted(s.value for s in scopes)), "ok")
        return grant

    def revoke(self, caller_id: str, patient_id: str, grantee_id: str) -> None:
        if caller_id != patient_id:
            self._audit("revoke", caller_id, patient_id, "*", "denied")
            raise AccessDeniedError("only the patient may revoke grants")
        with self._lock:
            if (patient_id, grantee_id) not in self._grants:
                raise NotFoundError(f"no grant for {grantee_id!r}")
            del self._grants[(patient_id, grantee_id)]
        self._audit("revoke", caller_id, patient_id, "*", "ok")

    def grants_for(self, patient_id: str) -> list[Grant]:
        with self._lock:
            return [g for (pid, _), g in self._grants.items() if pid == patient_id]

    # -- checks -----------------------------------------------------------------

    def check_access(
        self, grantee_id: str, patient_id: str, scope: Scope, now: datetime | None = None
    ) -> AccessDecision:
        """Allow iff self-access, implicit physician scope, or unexpired grant.

        Deny is a value, not an exception; every deny writes an audit line.
        """
        now = now or self._clock()
        scope = Scope(scope)
        if grantee_id == patient_id:
            return AccessDecision(True, "self")
        if self._treating.get(patient_id) == grantee_id and scope in PHYSICIAN_IMPLICIT_SCOPES:
            return AccessDecision(True, "treating_physician")
        grant = self._grants.get((patient_id, grantee_id))
        if grant is None:
            self._audit("check", grantee_id, patient_id, scope.value, "deny:no_grant")
            return AccessDecision(False, "no_grant")
        if grant.expired(now):
            self._audit("check", grantee_id, patient_id, scope.value, "deny:expired")
            return AccessDecision(False, "expired")
        if scope not in grant.scopes:
            self._audit("check", grantee_id, patient_id, scope.value, "deny:scope_not_granted")
            return AccessDecision(False, "scope_not_granted")
        return AccessDecision(True, "grant")

    # -- alert routing --------------------------------------------------------------

    def route_alert(self, alert: Alert, now: datetime | None = None) -> list[NotificationIntent]:
        """One push intent per grantee holding the alerts scope, plus the
        patient's own in-app intent."""
        now = now or self._clock()
        intents = [
            NotificationIntent(
                recipient_id=alert.patient_id, alert_id=alert.id, channel="in_app", created_at=now
            )
        ]
        for grant in self.grants_for(alert.patient_id):
            if not grant.expired(now) and Scope.ALERTS in grant.scopes:
                intents.append(
                    NotificationIntent(
                        recipient_id=grant.grantee_id,
                        alert_id=alert.id,
                        channel="push",
                        created_at=now,
                    )
                )
        return intents

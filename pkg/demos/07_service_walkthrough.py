"""Drive the whole platform through its HTTP/WebSocket surface in-process.

Run: python3 demos/07_service_walkthrough.py
"""

from fastapi.testclient import TestClient

from carebridge.access import Role
from carebridge.service.app import build_app
from carebridge.service.config import Config
from carebridge.service.platform import Platform

platform = Platform(Config())
platform.register_principal("lin", Role.PATIENT, "pw")
platform.register_principal("dr-wang", Role.PHYSICIAN, "pw")
platform.register_principal("xiaomei", Role.FAMILY_VIEWER, "pw")
platform.acl.assign_physician("lin", "dr-wang")

client = TestClient(build_app(platform))


def auth(principal):
    token = client.post("/auth/login", json={"principal_id": principal, "password": "pw"}).json()["token"]
    return {"Authorization": f"Bearer {token}"}


lin, wang, mei = auth("lin"), auth("dr-wang"), auth("xiaomei")
print("health:", client.get("/health").json())

# the patient grants the daughter glucose trends and alerts, nothing else
client.post("/patients/lin/grants", json={"grantee_id": "xiaomei", "scopes": ["glucose_trends", "alerts"]}, headers=lin)
print("daughter's scopes:", client.get("/patients/lin/scopes", headers=mei).json()["scopes"])
print("daughter reading medication status:",
      client.get("/patients/lin/adherence", params={"start": "2025-06-01T00:00:00", "end": "2025-07-01T00:00:00"}, headers=mei).status_code)

# a live consultation with streaming highlights
sid = client.post("/sessions", json={"patient_id": "lin", "physician_id": "dr-wang"}, headers=wang).json()["id"]
for seq, line in enumerate(
    ["physician|your HbA1c is 8.1, let us adjust", "patient|should I stop metformin?", "physician|no, keep metformin after meals"],
    start=1,
):
    client.post(f"/sessions/{sid}/chunks", json={"seq": seq, "offset_ms": seq * 3000, "payload_text": line}, headers=wang)

token = platform.tokens.issue("lin")
with client.websocket_connect(f"/ws/sessions/{sid}?token={token}") as ws:
    for _ in range(4):
        frame = ws.receive_json()
        print(f"frame {frame['seq']:>2} {frame['type']:<9}", frame["payload"].get("text") or frame["payload"].get("surface", ""))

transcript = client.get(f"/sessions/{sid}/transcript", headers=lin).json()
print("sidebar:", transcript["sidebar"])

# records + care evaluation -> alert frame on the daughter's stream
client.post("/patients/lin/glucose", json={"taken_at": "2025-06-15T10:00:00", "value": 14.5, "context": "random"}, headers=lin)
out = client.post("/patients/lin/care/evaluate", params={"now": "2025-06-15T12:00:00"}, headers=lin).json()
print("alerts:", [(a["kind"], [i["recipient_id"] for i in a["intents"]]) for a in out["alerts"]])

# the physician pulls the monthly report
report = client.get("/patients/lin/reports/2025-06", params={"preview": "true"}, headers=wang).json()
print("report glucose block:", report["glucose"])

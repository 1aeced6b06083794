"""HMAC-signed bearer tokens.

Token layout: `principal.issued.expires.signature` where the signature is
HMAC-SHA256 over the first three fields with the server secret. No state
is kept; verification recomputes the signature and checks expiry.
"""

from __future__ import annotations

import base64
import hashlib
import hmac
import time
from typing import Callable

from ..errors import AccessDeniedError, NotFoundError


def _b64(raw: bytes) -> str:
    return base64.urlsafe_b64encode(raw).decode().rstrip("=")


def _unb64(text: str) -> bytes:
    padding = "=" * (-len(text) % 4)
    return base64.urlsafe_b64decode(text + padding)


class TokenService:
    def __init__(self, secret: str, ttl_s: int = 86400, clock: Callable[[], float] = time.time):
        self._secret = secret.encode("utf-8")
        self._ttl_s = ttl_s
        self._clock = clock
        self._passwords: dict[str, str] = {}

    def set_password(self, principal_id: str, password: str) -> None:
        self._passwords[principal_id] = password

    def _sign(self, message: str) -> str:
        return hmac.new(self._secret, message.encode("utf-8"), hashlib.sha256).hexdigest()

    def issue(self, principal_id: str) -> str:
        issued = int(self._clock())
        expires = issued + self._ttl_s
        body = f"{_b64(principal_id.encode())}.{issued}.{expires}"
        return f"{body}.{self._sign(body)}"

    def authenticate(self, principal_id: str, password: str) -> str:
        stored = self._passwords.get(principal_id)
        if stored is None:
            raise NotFoundError(f"unknown principal {principal_id!r}")
        if not hmac.compare_digest(stored, password):
            raise AccessDeniedError("bad credentials")
        return self.issue(principal_id)

    def verify(self, token: str) -> str:
        """Returns the principal id or raises AccessDeniedError."""
        parts = token.split(".")
        if len(parts) != 4:
            raise AccessDeniedError("malformed token")
        body = ".".join(parts[:3])
        if not hmac.compare_digest(self._sign(body), parts[3]):
            raise AccessDeniedError("bad token signature")
        try:
            principal_id = _unb64(parts[0]).decode("utf-8")
            expires = int(parts[2])
        except Exception:
            raise AccessDeniedError("malformed token") from None
        if self._clock() >= expires:
            raise AccessDeniedError("token expired")
        return principal_id

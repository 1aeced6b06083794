"""Flat key=value configuration with environment overrides.

File lines are `key = value` (spaces optional, `#` comments). Every key
must be known; unknown keys fail startup by name. Environment variables
override file values with the prefix CAREBRIDGE_, dots mapped to single
underscores: `care.gap_days` <- CAREBRIDGE_CARE_GAP_DAYS.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ConfigError

ENV_PREFIX = "CAREBRIDGE_"

DEFAULTS: dict[str, str] = {
    "server.host": "127.0.0.1",
    "server.port": "8477",
    "graph.path": "",  # empty = use the bundled fixture graph
    "bank.path": "",  # empty = use the bundled question bank
    "store.kind": "memory",  # memory | file
    "store.path": "carebridge-store.jsonl",
    "auth.secret": "dev-secret-change-me",
    "auth.token_ttl_s": "86400",
    "care.gap_days": "3",
    "care.high_mmol": "13.9",
    "care.consecutive_missed": "2",
    "meals": "07:30,12:00,18:30",
    "reminder.window_min": "15",
    "qa.min_score": "0.01",
    "generator.timeout_s": "5.0",
}


@dataclass
class Config:
    values: dict[str, str] = field(default_factory=lambda: dict(DEFAULTS))

    def get(self, key: str) -> str:
        try:
            return self.values[key]
        except KeyError:
            raise ConfigError(f"unknown config key {key!r}") from None

    def get_int(self, key: str) -> int:
        try:
            return int(self.get(key))
        except ValueError:
            raise ConfigError(f"config key {key!r} must be an integer") from None

    def get_float(self, key: str) -> float:
        try:
            return float(self.get(key))
        except ValueError:
            raise ConfigError(f"config key {key!r} must be a number") from None

    def meal_times(self) -> list[str]:
        return [t.strip() for t in self.get("meals").split(",") if t.strip()]


def load_config(path: str | Path | None = None, env: dict[str, str] | None = None) -> Config:
    values = dict(DEFAULTS)
    if path is not None:
        text = Path(path).read_text(encoding="utf-8")
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
            key = key.strip()
            if key not in DEFAULTS:
                raise ConfigError(f"line {lineno}: unknown config key {key!r}")
            values[key] = value.strip()
    env = os.environ if env is None else env
    for key in DEFAULTS:
        env_key = ENV_PREFIX + key.replace(".", "_").upper()
        if env_key in env:
            values[key] = env[env_key]
    return Config(values=values)

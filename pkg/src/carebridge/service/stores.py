"""Keyed record stores behind one small contract.

Two reference implementations: an in-memory dict store and an append-only
JSONL file store that replays its log on open. Both are linearizable per
key (one lock) and hand out point-in-time snapshots for consistent reads.
Values must be JSON-serializable.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Any, Iterator, Protocol


class StoreSnapshot:
    """Immutable point-in-time view."""

    def __init__(self, puts: dict[str, Any], logs: dict[str, list[Any]]):
        self._puts = puts
        self._logs = logs

    def get(self, key: str) -> Any:
        return self._puts.get(key)

    def log(self, key: str) -> list[Any]:
        return list(self._logs.get(key, []))

    def scan(self, prefix: str = "") -> Iterator[tuple[str, Any]]:
        for key in sorted(self._puts):
            if key.startswith(prefix):
                yield key, self._puts[key]

    def scan_logs(self, prefix: str = "") -> Iterator[tuple[str, list[Any]]]:
        for key in sorted(self._logs):
            if key.startswith(prefix):
                yield key, list(self._logs[key])


class StoreAdapter(Protocol):
    def put(self, key: str, value: Any) -> None: ...
    def get(self, key: str) -> Any: ...
    def append(self, key: str, value: Any) -> None: ...
    def log(self, key: str) -> list[Any]: ...
    def scan(self, prefix: str = "") -> Iterator[tuple[str, Any]]: ...
    def scan_logs(self, prefix: str = "") -> Iterator[tuple[str, list[Any]]]: ...
    def snapshot(self) -> StoreSnapshot: ...


def _copy(value: Any) -> Any:
    # json round-trip: cheap at desk scale and guarantees isolation
    return json.loads(json.dumps(value))


class MemoryStore:
    def __init__(self):
        self._puts: dict[str, Any] = {}
        self._logs: dict[str, list[Any]] = {}
        self._lock = threading.Lock()

    def put(self, key: str, value: Any) -> None:
        with self._lock:
            self._puts[key] = _copy(value)

    def get(self, key: str) -> Any:
        with self._lock:
            value = self._puts.get(key)
            return _copy(value) if value is not None else None

    def append(self, key: str, value: Any) -> None:
        with self._lock:
            self._logs.setdefault(key, []).append(_copy(value))

    def log(self, key: str) -> list[Any]:
        with self._lock:
            return _copy(self._logs.get(key, []))

    def scan(self, prefix: str = ""):
        with self._lock:
            items = [(k, _copy(v)) for k, v in sorted(self._puts.items()) if k.startswith(prefix)]
        yield from items

    def scan_logs(self, prefix: str = ""):
        with self._lock:
            items = [(k, _copy(v)) for k, v in sorted(self._logs.items()) if k.startswith(prefix)]
        yield from items

    def snapshot(self) -> StoreSnapshot:
        with self._lock:
            return StoreSnapshot(_copy(self._puts), _copy(self._logs))


class FileStore:
    """Append-only JSONL operation log with an in-memory read mirror."""

    def __init__(self, path: str | Path):
        self._path = Path(path)
        self._mirror = MemoryStore()
        self._lock = threading.Lock()
        self._path.parent.mkdir(parents=True, exist_ok=True)
        if self._path.exists():
            with self._path.open("r", encoding="utf-8") as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    op = json.loads(line)
                    if op["op"] == "put":
                        self._mirror.put(op["key"], op["value"])
                    else:
                        self._mirror.append(op["key"], op["value"])
        self._fh = self._path.open("a", encoding="utf-8")

    def _write(self, op: str, key: str, value: Any) -> None:
        self._fh.write(json.dumps({"op": op, "key": key, "value": value}, sort_keys=True) + "\n")
        self._fh.flush()

    def put(self, key: str, value: Any) -> None:
        with self._lock:
            self._write("put", key, value)
            self._mirror.put(key, value)

    def get(self, key: str) -> Any:
        return self._mirror.get(key)

    def append(self, key: str, value: Any) -> None:
        with self._lock:
            self._write("append", key, value)
            self._mirror.append(key, value)

    def log(self, key: str) -> list[Any]:
        return self._mirror.log(key)

    def scan(self, prefix: str = ""):
        return self._mirror.scan(prefix)

    def scan_logs(self, prefix: str = ""):
        return self._mirror.scan_logs(prefix)

    def snapshot(self) -> StoreSnapshot:
        return self._mirror.snapshot()

    def close(self) -> None:
        self._fh.close()

"""Per-(source, key) response cache with per-entry TTL."""

from __future__ import annotations

import threading
import time
from typing import Callable, Hashable

_MISS = object()


class TtlCache:
    """Thread-safe TTL cache; a ttl of zero or less disables storage."""

    def __init__(self, clock: Callable[[], float] = time.monotonic):
        self._clock = clock
        self._lock = threading.Lock()
        self._store: dict[Hashable, tuple[float, object]] = {}

    def get(self, key: Hashable) -> tuple[bool, object]:
        now = self._clock()
        with self._lock:
            found = self._store.get(key, _MISS)
            if found is _MISS:
                return False, None
            expires_at, value = found
            if now >= expires_at:
                del self._store[key]
                return False, None
            return True, value

    def put(self, key: Hashable, value: object, ttl_s: float) -> None:
        if ttl_s <= 0:
            return
        with self._lock:
            self._store[key] = (self._clock() + ttl_s, value)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._store)

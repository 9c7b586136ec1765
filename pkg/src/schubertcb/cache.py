"""Persistent coefficient cache: JSON Lines, append-only, last-writer-wins.

One record per line: ``{"kind": ..., "key": ..., "value": "<decimal>"}``.
The file survives crashes mid-sweep because records are self-contained lines;
replaying the file applies duplicates in order, so the last writer wins.
A cache is consulted only while activated (CLI ``--cache`` or the
SCHUBERT_CACHE environment variable); library calls are otherwise pure.
"""

from __future__ import annotations

import json
import os
from typing import Callable

KINDS = ("lr", "qlr", "flag_sc", "cb_rank", "cb_deg4", "gw_deg4")


class PersistentCache:
    def __init__(self, path: str):
        self.path = path
        self.readonly = False
        self._mem: dict[tuple[str, str], int] = {}
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    self._mem[(rec["kind"], rec["key"])] = int(rec["value"])
        self._fh = open(path, "a", encoding="utf-8")

    def get(self, kind: str, key: str) -> int | None:
        return self._mem.get((kind, key))

    def put(self, kind: str, key: str, value: int) -> None:
        self._mem[(kind, key)] = value
        if self.readonly:
            return
        self._fh.write(json.dumps(
            {"kind": kind, "key": key, "value": str(value)},
            sort_keys=True, separators=(",", ":")) + "\n")
        self._fh.flush()

    def close(self) -> None:
        self._fh.close()

    def __len__(self) -> int:
        return len(self._mem)


_ACTIVE: PersistentCache | None = None


def activate(cache: PersistentCache | None) -> None:
    global _ACTIVE
    _ACTIVE = cache


def active() -> PersistentCache | None:
    return _ACTIVE


def default_path() -> str | None:
    return os.environ.get("SCHUBERT_CACHE")


def disk_memo(kind: str, key_fn: Callable[..., str]):
    """Route a pure integer-valued function through the active cache."""
    assert kind in KINDS

    def wrap(fn):
        def wrapper(*args, **kwargs):
            cache = _ACTIVE
            if cache is None:
                return fn(*args, **kwargs)
            key = key_fn(*args, **kwargs)
            hit = cache.get(kind, key)
            if hit is not None:
                return hit
            value = fn(*args, **kwargs)
            cache.put(kind, key, value)
            return value

        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        wrapper.__wrapped__ = fn
        return wrapper

    return wrap

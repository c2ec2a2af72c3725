"""Check-result cache with in-memory + JSON-lines file backing.

Each line of the cache file is ``{"key": ..., "result": ...}``. Keys hash
the check id, its parameters and ``config.CODE_VERSION``, so results from an
older code version are never served.
"""

from __future__ import annotations

import hashlib
import json
import os
from threading import Lock
from typing import Any, Dict, Optional

try:
    from . import config
except ImportError:
    import brauer_lab.config as config

logger = config.get_file_logger(__name__)

# ---------------- In-memory state ----------------
# path -> key -> cached result
_CACHE: Dict[str, Dict[str, Dict[str, Any]]] = {}
_CACHE_LOCK = Lock()


def _canonical(payload: Any) -> str:
    return json.dumps(payload, separators=(",", ":"), sort_keys=True, ensure_ascii=False)


def cache_key(check: str, params: Dict[str, Any]) -> str:
    """SHA-256 of the canonical JSON of ``(check, params, CODE_VERSION)``."""
    text = _canonical({"check": check, "params": params, "version": config.CODE_VERSION})
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _read_file(path: str) -> Dict[str, Dict[str, Any]]:
    entries: Dict[str, Dict[str, Any]] = {}
    if not os.path.exists(path):
        logger.debug("Cache file %s does not exist yet", path)
        return entries
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    entries[record["key"]] = record["result"]
                except (ValueError, KeyError, TypeError) as e:
                    logger.warning("Skipping unreadable cache line %s:%d: %s", path, lineno, e, exc_info=True)
    except OSError as e:
        logger.warning("Failed to read cache file %s: %s", path, e, exc_info=True)
    logger.debug("Loaded %d cached results from %s", len(entries), path)
    return entries


def load_cache(path: str) -> Dict[str, Dict[str, Any]]:
    """Return every cached result in ``path``, reading the file at most once."""
    with _CACHE_LOCK:
        if path in _CACHE:
            return _CACHE[path]
    entries = _read_file(path)
    with _CACHE_LOCK:
        return _CACHE.setdefault(path, entries)


def get_cached(path: str, key: str) -> Optional[Dict[str, Any]]:
    entry = load_cache(path).get(key)
    if entry is None:
        logger.debug("Cache miss for %s", key[:12])
    return entry


def store_result(path: str, key: str, payload: Dict[str, Any]) -> None:
    """Remember ``payload`` under ``key`` and append it to ``path``."""
    load_cache(path)
    line = _canonical({"key": key, "result": payload})
    with _CACHE_LOCK:
        _CACHE[path][key] = payload
        directory = os.path.dirname(os.path.abspath(path))
        try:
            os.makedirs(directory, exist_ok=True)
            with open(path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
            logger.debug("Persisted %s to %s", key[:12], path)
        except OSError as e:
            logger.warning("Persist to %s failed: %s", path, e, exc_info=True)


def cached_for_check(path: str, check: str) -> list[Dict[str, Any]]:
    """Every cached result of ``check`` in ``path``."""
    return [entry for entry in load_cache(path).values() if entry.get("check") == check]


def clear_memory_cache() -> None:
    """Forget everything read so far; files are left untouched."""
    logger.debug("Clearing in-memory result cache")
    with _CACHE_LOCK:
        _CACHE.clear()

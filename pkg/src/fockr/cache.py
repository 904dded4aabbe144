"""On-disk JSON cache for symbolic artifacts, one file per (kind, weight)."""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

SCHEMA_VERSION = 1

_cache_dir: Path | None = None


class SchemaMismatch(ValueError):
    pass


def set_cache_dir(path) -> None:
    """Enable the disk cache under ``path`` (``None`` disables it)."""
    global _cache_dir
    if path is None:
        _cache_dir = None
        return
    _cache_dir = Path(path)
    _cache_dir.mkdir(parents=True, exist_ok=True)
    manifest = _cache_dir / "manifest.json"
    if manifest.exists():
        found = json.loads(manifest.read_text()).get("schema_version")
        if found != SCHEMA_VERSION:
            # stale cache: drop every entry
            for f in _cache_dir.glob("*.json"):
                f.unlink()
    atomic_write(manifest, {"schema_version": SCHEMA_VERSION})


def get_cache_dir() -> Path | None:
    return _cache_dir


def atomic_write(path: Path, obj) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w") as fh:
        json.dump(obj, fh, separators=(",", ":"), sort_keys=False)
    os.replace(tmp, path)


def load(kind: str, weight: int):
    if _cache_dir is None:
        return None
    path = _cache_dir / f"{kind}-w{weight}.json"
    if not path.exists():
        return None
    obj = json.loads(path.read_text())
    if obj.get("schema_version") != SCHEMA_VERSION:
        return None
    return obj["data"]


def store(kind: str, weight: int, data) -> None:
    if _cache_dir is None:
        return
    atomic_write(_cache_dir / f"{kind}-w{weight}.json",
                 {"schema_version": SCHEMA_VERSION, "kind": kind, "weight": weight, "data": data})

"""Content-addressed JSON cache on disk.

Each entry lives in ``<root>/<hh>/<sha256>.json`` where ``hh`` is the first
two hex digits of the key hash. Writes go to a temporary file in the same
directory and are moved into place with :func:`os.replace`, so readers
never see a partial file.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

ENV_CACHE_DIR = "ORTHOSCHUBERT_CACHE_DIR"


def key_digest(key) -> str:
    blob = json.dumps(key, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class DiskCache:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    @classmethod
    def from_env(cls, explicit: str | None = None) -> "DiskCache | None":
        root = explicit or os.environ.get(ENV_CACHE_DIR)
        return cls(root) if root else None

    def path(self, key) -> Path:
        h = key_digest(key)
        return self.root / h[:2] / f"{h}.json"

    def get(self, key):
        p = self.path(key)
        try:
            with open(p, encoding="utf-8") as fh:
                record = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        if record.get("key") != key:
            return None
        return record.get("value")

    def put(self, key, value) -> None:
        p = self.path(key)
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump({"key": key, "value": value}, fh, sort_keys=True, indent=1)
            os.replace(tmp, p)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise

"""On-disk cache of curve records, one JSON file per (a, b)."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .derivatives import CurveRecord, curve_polynomial

ENV_VAR = "EXPCURVE_CACHE"
DEFAULT_DIR = ".expcurve"


def cache_dir(path: str | os.PathLike | None = None) -> Path:
    """Explicit path, else $EXPCURVE_CACHE, else ./.expcurve."""
    return Path(path or os.environ.get(ENV_VAR) or DEFAULT_DIR)


def atomic_write(path: Path, text: str) -> None:
    """Write to a temporary file in the same directory, then rename over ``path``."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class CurveCache:
    def __init__(self, root: str | os.PathLike | None = None):
        self.root = cache_dir(root)

    def path(self, a: int, b: int) -> Path:
        return self.root / f"curve_a{a}_b{b}.json"

    def load(self, a: int, b: int) -> CurveRecord | None:
        p = self.path(a, b)
        if not p.exists():
            return None
        try:
            return CurveRecord.from_dict(json.loads(p.read_text(encoding="utf-8")))
        except (ValueError, KeyError):
            return None  # a damaged entry is recomputed

    def store(self, rec: CurveRecord) -> Path:
        p = self.path(rec.a, rec.b)
        atomic_write(p, json.dumps(rec.to_dict(), indent=1) + "\n")
        return p

    def record(self, a: int, b: int) -> CurveRecord:
        """Cached record, generated and stored on a miss."""
        rec = self.load(a, b)
        if rec is None:
            rec = curve_polynomial(a, b)
            self.store(rec)
        return rec


__all__ = ["CurveCache", "DEFAULT_DIR", "ENV_VAR", "atomic_write", "cache_dir"]

"""JSON schemas for the structured command-line output."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

NAMES = ("curve_record", "genus_report", "singular_locus", "pipeline", "elliptic", "scoreboard")


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"unknown schema {name!r}")
    return json.loads(resources.files(__package__).joinpath(f"{name}.json").read_text())


def validate(name: str, obj) -> None:
    """Raise jsonschema.ValidationError when ``obj`` does not match schema ``name``."""
    import jsonschema

    jsonschema.validate(obj, load(name))


__all__ = ["NAMES", "load", "validate"]

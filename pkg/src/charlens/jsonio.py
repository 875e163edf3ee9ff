"""Canonical JSON encoding.

Every serialized artifact (interchange layers, project files, service
response bodies, CLI exports) goes through one encoder so that identical
state always yields byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any


def canonical_bytes(obj: Any) -> bytes:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def canonical_str(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))

"""Serializers shared by the HTTP service and the CLI.

Both front doors emit these exact bytes, so a CLI export and a service
response body for the same snapshot compare equal byte for byte.
"""

from __future__ import annotations

import csv
import io

from .views import ContextLayout, IndicatorMatrix, WordZone
from .jsonio import canonical_bytes


def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def matrix_to_json(matrix: IndicatorMatrix) -> bytes:
    return canonical_bytes(matrix.to_dict())


def matrix_to_csv(matrix: IndicatorMatrix) -> bytes:
    """RFC 4180 table: one row per character, one column per chapter or
    sentence; empty cells are empty fields."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["character"] + [str(c) for c in matrix.columns])
    for char_id, name, row in zip(matrix.rows, matrix.row_names, matrix.cells):
        writer.writerow([name or char_id] + [_format_value(c.value if c else None) for c in row])
    return buf.getvalue().encode("utf-8")


def wordzone_to_json(zone: WordZone) -> bytes:
    return canonical_bytes(zone.to_dict())


def wordzone_to_csv(zone: WordZone) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["lemma", "weight", "tf", "df", "cluster", "rank"])
    for e in zone.entries:
        writer.writerow([e.lemma, _format_value(e.weight), e.tf, e.df, e.cluster, e.rank])
    return buf.getvalue().encode("utf-8")


def contexts_to_json(layout: ContextLayout) -> bytes:
    return canonical_bytes(layout.to_dict())


def contexts_to_csv(layout: ContextLayout) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["text", "chapter", "width", "row"])
    for p in layout.placements:
        writer.writerow([p.text, p.chapter, _format_value(p.width), "" if p.row is None else p.row])
    return buf.getvalue().encode("utf-8")

"""Chapter segmentation mirroring the engine's ingestion contract.

The engine addresses everything by unicode scalar offsets into its
normalized text, so the adapter must normalize and segment the same way:
line endings collapsed to ``\\n``, chapters delimited by the same default
heading pattern, heading lines (plus a short stand-alone title line)
excluded from chapter bodies.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

DEFAULT_HEADING_PATTERN = r"^[ \t]*chapter\s+(?P<label>\d+|[ivxlcdm]+)\.?[ \t]*$"

_MAX_TITLE_LINE_LEN = 60


@dataclass(frozen=True)
class ChapterSlice:
    index: int
    start: int
    end: int


def normalize(raw: str) -> str:
    return raw.replace("\r\n", "\n").replace("\r", "\n")


def _line_end(text: str, pos: int) -> int:
    nl = text.find("\n", pos)
    return len(text) if nl == -1 else nl + 1


def segment(text: str, heading_pattern: str = DEFAULT_HEADING_PATTERN) -> list[ChapterSlice]:
    """Chapter body slices over already-normalized text."""
    heading_re = re.compile(heading_pattern, re.MULTILINE | re.IGNORECASE)
    matches = list(heading_re.finditer(text))
    if not matches:
        return [ChapterSlice(0, 0, len(text))]
    bodies: list[tuple[int, int]] = []
    if text[: matches[0].start()].strip():
        bodies.append((0, matches[0].start()))
    for i, m in enumerate(matches):
        block_end = _line_end(text, m.end())
        next_heading = matches[i + 1].start() if i + 1 < len(matches) else len(text)
        line1_end = _line_end(text, block_end) if block_end < len(text) else block_end
        line1 = text[block_end:line1_end]
        if (
            line1.strip()
            and len(line1.strip()) <= _MAX_TITLE_LINE_LEN
            and block_end < next_heading
            and not heading_re.match(line1.rstrip("\n"))
        ):
            line2_end = _line_end(text, line1_end) if line1_end < len(text) else line1_end
            if not text[line1_end:line2_end].strip() and text[line1_end:next_heading].strip():
                block_end = line1_end
        if block_end < next_heading:
            bodies.append((block_end, next_heading))
    return [ChapterSlice(i, start, end) for i, (start, end) in enumerate(bodies)]

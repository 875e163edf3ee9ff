"""Story ingestion and offset-addressed text access.

A story becomes an immutable :class:`Document`: normalized text plus an
ordered list of chapters found by a line-anchored heading pattern. All
downstream components address the text exclusively through character-offset
:class:`Span` values (unicode scalar offsets, i.e. Python ``str`` indices),
so parser outputs and UI highlights agree on positions by construction.
"""

from __future__ import annotations

import hashlib
import re
from bisect import bisect_right
from dataclasses import dataclass, field

from .errors import EmptyDocument, PatternInvalid, SpanOutOfRange

#: Matches whole lines like "CHAPTER I", "Chapter 12." or "CHAPTER XIV".
#: The ``label`` group seeds the chapter title when no title line follows.
DEFAULT_HEADING_PATTERN = r"^[ \t]*chapter\s+(?P<label>\d+|[ivxlcdm]+)\.?[ \t]*$"

_BOILERPLATE_START = re.compile(r"^\s*\*{3}\s*START OF.*PROJECT GUTENBERG.*$", re.MULTILINE | re.IGNORECASE)
_BOILERPLATE_END = re.compile(r"^\s*\*{3}\s*END OF.*PROJECT GUTENBERG.*$", re.MULTILINE | re.IGNORECASE)

#: A candidate title line is kept only when it is short and clearly set off
#: from the body (followed by a blank line or end of text).
_MAX_TITLE_LINE_LEN = 60


@dataclass(frozen=True, order=True)
class Span:
    """Half-open character range ``[start, end)`` into a document's text."""

    start: int
    end: int

    def __post_init__(self):
        if self.start < 0 or self.start >= self.end:
            raise ValueError(f"invalid span [{self.start}, {self.end})")

    def __len__(self) -> int:
        return self.end - self.start

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end

    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end

    def as_pair(self) -> list[int]:
        return [self.start, self.end]


@dataclass(frozen=True)
class Chapter:
    index: int
    title: str | None
    span: Span


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    chapters: tuple[Chapter, ...]
    source_meta: dict = field(default_factory=dict)

    def chapter_at(self, offset: int) -> int | None:
        """Chapter index whose span contains ``offset``, or None in a gap
        (heading block) or outside the chapter range."""
        starts = [c.span.start for c in self.chapters]
        i = bisect_right(starts, offset) - 1
        if i >= 0 and self.chapters[i].span.start <= offset < self.chapters[i].span.end:
            return i
        return None

    def chapter_for_offset(self, offset: int) -> int:
        """Like :meth:`chapter_at` but never None: an offset inside a heading
        block is assigned to the chapter that heading opens (the next chapter
        by start), and offsets past the last chapter to the last chapter."""
        exact = self.chapter_at(offset)
        if exact is not None:
            return exact
        for c in self.chapters:
            if c.span.start > offset:
                return c.index
        return self.chapters[-1].index

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "text": self.text,
            "chapters": [
                {"index": c.index, "title": c.title, "span": c.span.as_pair()} for c in self.chapters
            ],
            "source_meta": dict(self.source_meta),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Document":
        chapters = tuple(
            Chapter(index=c["index"], title=c["title"], span=Span(*c["span"])) for c in data["chapters"]
        )
        return cls(id=data["id"], text=data["text"], chapters=chapters, source_meta=dict(data["source_meta"]))


@dataclass(frozen=True)
class IngestConfig:
    heading_pattern: str = DEFAULT_HEADING_PATTERN
    strip_boilerplate: bool = False

    def to_dict(self) -> dict:
        return {"heading_pattern": self.heading_pattern, "strip_boilerplate": self.strip_boilerplate}

    @classmethod
    def from_dict(cls, data: dict) -> "IngestConfig":
        return cls(
            heading_pattern=data.get("heading_pattern", DEFAULT_HEADING_PATTERN),
            strip_boilerplate=bool(data.get("strip_boilerplate", False)),
        )


def _normalize_newlines(raw: str) -> str:
    return raw.replace("\r\n", "\n").replace("\r", "\n")


def _strip_boilerplate(text: str) -> str:
    start_m = _BOILERPLATE_START.search(text)
    end_m = _BOILERPLATE_END.search(text)
    start = 0
    end = len(text)
    if start_m:
        nl = text.find("\n", start_m.end())
        start = nl + 1 if nl != -1 else len(text)
    if end_m and end_m.start() >= start:
        end = end_m.start()
    return text[start:end]


def _line_end(text: str, pos: int) -> int:
    """Offset one past the newline terminating the line containing ``pos``
    (or len(text) for the last line)."""
    nl = text.find("\n", pos)
    return len(text) if nl == -1 else nl + 1


def ingest_text(
    raw: str,
    config: IngestConfig | None = None,
    doc_id: str | None = None,
    source_meta: dict | None = None,
) -> Document:
    """Build a Document from raw story text.

    Chapters are delimited by lines matching the heading pattern; the heading
    line (and a short stand-alone title line directly under it, when present)
    is excluded from the chapter body span. Text before the first heading
    becomes an untitled leading chapter when it is not pure whitespace. A
    story without headings is a single chapter covering the whole body.
    """
    config = config or IngestConfig()
    if raw is None or not raw.strip():
        raise EmptyDocument("document text is empty")
    try:
        heading_re = re.compile(config.heading_pattern, re.MULTILINE | re.IGNORECASE)
    except re.error as exc:
        raise PatternInvalid(f"heading pattern does not compile: {exc}") from exc

    text = _normalize_newlines(raw)
    if config.strip_boilerplate:
        text = _strip_boilerplate(text)
        if not text.strip():
            raise EmptyDocument("document text is empty after boilerplate stripping")

    matches = list(heading_re.finditer(text))
    chapters: list[tuple[str | None, int, int]] = []  # (title, body_start, body_end)

    if not matches:
        chapters.append((None, 0, len(text)))
    else:
        if text[: matches[0].start()].strip():
            chapters.append((None, 0, matches[0].start()))
        for i, m in enumerate(matches):
            label = None
            groups = m.groupdict()
            if "label" in groups and groups["label"] is not None:
                label = groups["label"]
            elif m.groups():
                label = m.group(1)

            block_end = _line_end(text, m.end())
            title = label
            # stand-alone title line directly under the heading
            line1_end = _line_end(text, block_end) if block_end < len(text) else block_end
            line1 = text[block_end:line1_end]
            next_heading = matches[i + 1].start() if i + 1 < len(matches) else len(text)
            if (
                line1.strip()
                and len(line1.strip()) <= _MAX_TITLE_LINE_LEN
                and block_end < next_heading
                and not heading_re.match(line1.rstrip("\n"))
            ):
                line2_end = _line_end(text, line1_end) if line1_end < len(text) else line1_end
                line2 = text[line1_end:line2_end]
                # a title line must be set off by a blank line and must leave
                # actual body text in the chapter
                if not line2.strip() and text[line1_end:next_heading].strip():
                    title = line1.strip()
                    block_end = line1_end
            body_end = next_heading
            if block_end < body_end:
                chapters.append((title, block_end, body_end))
            # a heading immediately followed by another heading has no body
            # and is dropped

    built = tuple(
        Chapter(index=i, title=title, span=Span(start, end))
        for i, (title, start, end) in enumerate(chapters)
    )
    if not built:
        raise EmptyDocument("no chapter bodies found")

    if doc_id is None:
        digest = hashlib.sha256()
        digest.update(text.encode("utf-8"))
        digest.update(config.heading_pattern.encode("utf-8"))
        doc_id = "doc-" + digest.hexdigest()[:12]
    return Document(id=doc_id, text=text, chapters=built, source_meta=dict(source_meta or {}))


def slice_text(doc: Document, span: Span) -> str:
    """Return exactly the substring addressed by ``span``."""
    if span.end > len(doc.text):
        raise SpanOutOfRange(f"span [{span.start}, {span.end}) exceeds document length {len(doc.text)}")
    return doc.text[span.start : span.end]

"""View-ready aggregates: occurrence matrices, word zones, context layout.

Every non-empty matrix cell carries evidence spans pointing back into the
text, so any rendered value can be traced to the sentences, mentions, or
quotes that produced it. All builders are pure assembly over an analysis
snapshot; they add no new extraction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .analysis import Snapshot
from .annotations import EMOTIONS
from .corpus import Span
from .dynamics import ClusterConfig, WordZoneEntry, cluster_words, word_weight
from .errors import NoRecords, UnsupportedCombination

MATRIX_KINDS = ("presence", "speech", "sentiment", "emotion", "action_change")
MATRIX_LEVELS = ("chapter", "sentence")
WORDZONE_KINDS = ("actions", "definitions")


@dataclass(frozen=True)
class MatrixCell:
    value: float | int | str
    normalized: float | None
    evidence: tuple[Span, ...]

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "normalized": self.normalized,
            "evidence": [s.as_pair() for s in self.evidence],
        }


@dataclass(frozen=True)
class IndicatorMatrix:
    kind: str
    level: str
    focus_chapter: int | None
    rows: tuple[str, ...]  # character ids
    row_names: tuple[str, ...]
    columns: tuple[int, ...]  # chapter or global sentence indices
    cells: tuple[tuple[MatrixCell | None, ...], ...]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "level": self.level,
            "focus_chapter": self.focus_chapter,
            "rows": list(self.rows),
            "row_names": list(self.row_names),
            "columns": list(self.columns),
            "cells": [[c.to_dict() if c else None for c in row] for row in self.cells],
        }


@dataclass(frozen=True)
class WordZone:
    character: str
    kind: str
    entries: tuple[WordZoneEntry, ...]

    def to_dict(self) -> dict:
        return {
            "character": self.character,
            "kind": self.kind,
            "entries": [e.to_dict() for e in self.entries],
        }


@dataclass(frozen=True)
class ContextLabel:
    text: str
    chapter: int
    width: float  # in chapter-axis units
    priority: int = 0


@dataclass(frozen=True)
class ContextPlacement:
    text: str
    chapter: int
    width: float
    row: int | None  # None: dropped

    def to_dict(self) -> dict:
        return {"text": self.text, "chapter": self.chapter, "width": self.width, "row": self.row}


@dataclass(frozen=True)
class ContextLayout:
    placements: tuple[ContextPlacement, ...]
    max_rows: int

    def to_dict(self) -> dict:
        return {"placements": [p.to_dict() for p in self.placements], "max_rows": self.max_rows}


# ---------------------------------------------------------------------------
# occurrence matrices


def _column_units(snapshot: Snapshot, level: str, focus_chapter: int | None) -> list[int]:
    if level == "chapter":
        return list(range(len(snapshot.doc.chapters)))
    if focus_chapter is None or not 0 <= focus_chapter < len(snapshot.doc.chapters):
        raise UnsupportedCombination("sentence level requires a valid focus_chapter")
    return [s.index for s in snapshot.layer.sentences if s.chapter == focus_chapter]


def _sentences_in_unit(snapshot: Snapshot, level: str, unit: int) -> list[int]:
    if level == "chapter":
        return [s.index for s in snapshot.layer.sentences if s.chapter == unit]
    return [unit]


def build_matrix(
    snapshot: Snapshot,
    kind: str,
    level: str = "chapter",
    characters: list[str] | None = None,
    focus_chapter: int | None = None,
) -> IndicatorMatrix:
    """Assemble one occurrence matrix.

    Cell semantics by kind: presence = mention count; speech = attributed
    quote count; sentiment = mean smoothed value over sentences mentioning
    the character in the unit; emotion = modal label over those sentences;
    action_change = chapter-over-chapter change value (chapter level only).
    """
    if kind not in MATRIX_KINDS:
        raise UnsupportedCombination(f"unknown matrix kind {kind!r}")
    if level not in MATRIX_LEVELS:
        raise UnsupportedCombination(f"unknown matrix level {level!r}")
    if kind == "action_change" and level == "sentence":
        raise UnsupportedCombination("action_change is only defined chapter over chapter")

    registry = snapshot.registry
    if characters is None:
        characters = [c.id for c in registry.characters]
    row_names = tuple(registry.character(c).display_name for c in characters)
    columns = _column_units(snapshot, level, focus_chapter)
    result = snapshot.result

    grid: list[list[MatrixCell | None]] = []
    for char_id in characters:
        char = registry.character(char_id)
        mention_sentences = snapshot.character_sentences(char_id)
        row: list[MatrixCell | None] = []
        for unit in columns:
            cell: MatrixCell | None = None
            if kind == "presence":
                if level == "chapter":
                    evidence = tuple(
                        m for m in char.mentions if snapshot.doc.chapter_for_offset(m.start) == unit
                    )
                    count = result.presence.get(char_id, {}).get(unit, 0)
                else:
                    evidence = tuple(mention_sentences.get(unit, ()))
                    # under the sentences unit a sentence counts once, so
                    # chapter cells stay the sum of their sentence cells
                    count = min(len(evidence), 1) if snapshot.config.presence_unit == "sentences" else len(evidence)
                if count:
                    cell = MatrixCell(value=count, normalized=None, evidence=evidence)
            elif kind == "speech":
                quotes = [
                    q
                    for q in result.quotes
                    if q.speaker == char_id
                    and (
                        (level == "chapter" and q.chapter == unit)
                        or (level == "sentence" and q.sentences and q.sentences[0] == unit)
                    )
                ]
                if quotes:
                    cell = MatrixCell(
                        value=len(quotes), normalized=None, evidence=tuple(q.span for q in quotes)
                    )
            elif kind == "sentiment":
                hits = [s for s in _sentences_in_unit(snapshot, level, unit) if s in mention_sentences]
                if hits:
                    value = sum(result.smoothed[s] for s in hits) / len(hits)
                    cell = MatrixCell(
                        value=value,
                        normalized=(value + 1.0) / 2.0,
                        evidence=tuple(snapshot.layer.sentences[s].span for s in hits),
                    )
            elif kind == "emotion":
                hits = [s for s in _sentences_in_unit(snapshot, level, unit) if s in mention_sentences]
                labeled = [s for s in hits if result.emotions[s].label is not None]
                if labeled:
                    tally = Counter(result.emotions[s].label for s in labeled)
                    modal = max(EMOTIONS, key=lambda e: tally.get(e, 0))
                    cell = MatrixCell(
                        value=modal,
                        normalized=None,
                        evidence=tuple(
                            snapshot.layer.sentences[s].span
                            for s in labeled
                            if result.emotions[s].label == modal
                        ),
                    )
            else:  # action_change
                value = result.action_changes.get(char_id, {}).get(unit)
                if value is not None:
                    evidence = tuple(
                        a.verb_span for a in result.actions if a.character == char_id and a.chapter == unit
                    )
                    cell = MatrixCell(value=value, normalized=value, evidence=evidence)
            row.append(cell)
        grid.append(row)

    if kind in ("presence", "speech"):
        peak = max((c.value for row in grid for c in row if c), default=0)
        if peak:
            grid = [
                [
                    MatrixCell(c.value, c.value / peak, c.evidence) if c else None
                    for c in row
                ]
                for row in grid
            ]

    return IndicatorMatrix(
        kind=kind,
        level=level,
        focus_chapter=focus_chapter if level == "sentence" else None,
        rows=tuple(characters),
        row_names=row_names,
        columns=tuple(columns),
        cells=tuple(tuple(row) for row in grid),
    )


def cooccurrence(snapshot: Snapshot, character: str, chapter: int) -> set[str]:
    """Other characters with at least one mention in the chapter."""
    snapshot.registry.character(character)
    out = set()
    for other in snapshot.registry.characters:
        if other.id == character:
            continue
        if snapshot.result.presence.get(other.id, {}).get(chapter, 0) > 0:
            out.add(other.id)
    return out


# ---------------------------------------------------------------------------
# word zones


def build_wordzone(
    snapshot: Snapshot,
    character: str,
    kind: str,
    cluster_cfg: ClusterConfig | None = None,
) -> WordZone:
    """Weight-ranked, semantically clustered word summary for one character."""
    if kind not in WORDZONE_KINDS:
        raise UnsupportedCombination(f"unknown word zone kind {kind!r}")
    snapshot.registry.character(character)
    if kind == "actions":
        lemmas = [a.verb_lemma.lower() for a in snapshot.result.actions if a.character == character]
    else:
        lemmas = [
            d.adjective_lemma.lower() for d in snapshot.result.definitions if d.character == character
        ]
    if not lemmas:
        raise NoRecords(f"character {character!r} has no {kind} records")

    tf = Counter(lemmas)
    story = Counter(t.lemma.lower() for t in snapshot.layer.tokens)
    clusters = cluster_words(sorted(tf), snapshot.table, cluster_cfg)

    scored = []
    for lemma in sorted(tf):
        weight = word_weight(lemma, tf, story)
        scored.append((lemma, weight))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    entries = tuple(
        WordZoneEntry(
            lemma=lemma,
            weight=weight,
            tf=tf[lemma],
            df=story[lemma],
            cluster=clusters[lemma],
            rank=rank,
        )
        for rank, (lemma, weight) in enumerate(scored)
    )
    return WordZone(character=character, kind=kind, entries=entries)


# ---------------------------------------------------------------------------
# context label layout


def default_context_labels(snapshot: Snapshot, char_per_unit: float = 8.0) -> list[ContextLabel]:
    """Context overlay inputs: chapter titles plus one label per (context
    tag, chapter with mentions), heavier-mentioned tags first. Width is a
    text-length estimate in chapter units; UIs with real font metrics pass
    their own labels instead."""
    labels = []
    for ch in snapshot.doc.chapters:
        if ch.title:
            labels.append(
                ContextLabel(
                    text=ch.title,
                    chapter=ch.index,
                    width=max(1.0, len(ch.title) / char_per_unit),
                    priority=0,
                )
            )
    for tag in snapshot.registry.context_tags:
        per_chapter = Counter(snapshot.doc.chapter_for_offset(m.start) for m in tag.mentions)
        for chapter, count in sorted(per_chapter.items()):
            labels.append(
                ContextLabel(
                    text=tag.name,
                    chapter=chapter,
                    width=max(1.0, len(tag.name) / char_per_unit),
                    priority=-count,
                )
            )
    return labels


def layout_contexts(labels: list[ContextLabel], max_rows: int, chapter_count: int) -> ContextLayout:
    """Assign context labels to overlay rows.

    Labels are processed in (chapter, priority) order; the dynamic program
    maximizes the number of placed labels over all row assignments, breaking
    ties toward lower total row index and earlier-processed labels. A
    label's horizontal interval is [chapter, chapter + width); labels that
    cannot fit anywhere are dropped.
    """
    if max_rows < 1:
        raise ValueError(f"max_rows must be >= 1, got {max_rows}")
    ordered = sorted(
        (lab for lab in labels if 0 <= lab.chapter < chapter_count),
        key=lambda lab: (lab.chapter, lab.priority, lab.text),
    )
    skipped = [lab for lab in labels if not 0 <= lab.chapter < chapter_count]
    intervals = [
        (float(lab.chapter), float(lab.chapter) + min(lab.width, chapter_count - lab.chapter))
        for lab in ordered
    ]
    n = len(ordered)
    memo: dict[tuple[int, tuple[float, ...]], tuple[tuple[int, int], int]] = {}

    def best(i: int, ends: tuple[float, ...]) -> tuple[tuple[int, int], int]:
        """Returns ((placed, -total_row_index), chosen option) from label i on.

        Option r in [0, max_rows) places label i on row r; option max_rows
        skips it. First option among ties wins, preferring placement on the
        lowest row.
        """
        if i == n:
            return (0, 0), -1
        start, end = intervals[i]
        # ends at or before this label's start act like free rows from here
        # on (starts are non-decreasing), so canonicalize them
        ends = tuple(e if e > start else float("-inf") for e in ends)
        key = (i, ends)
        hit = memo.get(key)
        if hit is not None:
            return hit
        result: tuple[tuple[int, int], int] | None = None
        for r in range(max_rows):
            if ends[r] > start:
                continue
            sub, _ = best(i + 1, ends[:r] + (end,) + ends[r + 1 :])
            value = (sub[0] + 1, sub[1] - r)
            if result is None or value > result[0]:
                result = (value, r)
        sub, _ = best(i + 1, ends)
        if result is None or sub > result[0]:
            result = (sub, max_rows)
        memo[key] = result
        return result

    ends0 = tuple([float("-inf")] * max_rows)
    placements = []
    i, ends = 0, ends0
    while i < n:
        _, choice = best(i, ends)
        lab = ordered[i]
        if choice < max_rows:
            placements.append(ContextPlacement(lab.text, lab.chapter, lab.width, choice))
            start, end = intervals[i]
            ends = ends[:choice] + (end,) + ends[choice + 1 :]
        else:
            placements.append(ContextPlacement(lab.text, lab.chapter, lab.width, None))
        i += 1
    placements.extend(ContextPlacement(lab.text, lab.chapter, lab.width, None) for lab in skipped)
    return ContextLayout(placements=tuple(placements), max_rows=max_rows)

"""Reviewed coreference clusters: naming, labeling, merging.

Coreference output is noisy and anonymous, so the registry keeps one review
row per detected cluster. A human (or the auto-promotion switch) decides
which clusters are characters, which are contextual tags, and which are
noise; merge links connect chapter-scoped clusters that denote the same
entity. Everything downstream (all six indicators) sees only the derived
characters, never the raw clusters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .annotations import AnnotationLayer
from .corpus import Document, Span
from .errors import CycleError, SelfMerge, UnknownCluster

LABELS = ("unreviewed", "character", "context", "discarded")

SAMPLE_MENTIONS = 5


@dataclass
class ClusterReview:
    cluster_id: str
    assigned_name: str | None = None
    label: str = "unreviewed"
    merged_into: str | None = None

    def to_dict(self) -> dict:
        return {
            "cluster_id": self.cluster_id,
            "assigned_name": self.assigned_name,
            "label": self.label,
            "merged_into": self.merged_into,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClusterReview":
        return cls(
            cluster_id=data["cluster_id"],
            assigned_name=data.get("assigned_name"),
            label=data.get("label", "unreviewed"),
            merged_into=data.get("merged_into"),
        )


@dataclass(frozen=True)
class Character:
    id: str
    display_name: str
    member_clusters: frozenset[str]
    mentions: tuple[Span, ...]
    provisional: bool = False


@dataclass(frozen=True)
class ContextTag:
    name: str
    mentions: tuple[Span, ...]


class CharacterRegistry:
    """Review state over one annotation layer's clusters.

    Mutations rebuild the derived character set atomically, so readers always
    observe a consistent snapshot. The layer and document are immutable.
    """

    def __init__(
        self,
        layer: AnnotationLayer,
        doc: Document,
        auto_promote_threshold: int | None = None,
        reviews: list[ClusterReview] | None = None,
    ):
        self._layer = layer
        self._doc = doc
        self.auto_promote_threshold = auto_promote_threshold
        self._clusters = {c.id: c for c in layer.clusters}
        self.reviews: dict[str, ClusterReview] = {c.id: ClusterReview(cluster_id=c.id) for c in layer.clusters}
        if reviews is not None:
            for review in reviews:
                if review.cluster_id in self.reviews:
                    self.reviews[review.cluster_id] = review
        self._rebuild()

    @property
    def layer(self) -> AnnotationLayer:
        return self._layer

    @property
    def doc(self) -> Document:
        return self._doc

    # -- mutations ----------------------------------------------------------

    def set_label(self, cluster_id: str, label: str) -> None:
        if label not in LABELS:
            raise ValueError(f"label must be one of {LABELS}, got {label!r}")
        self._review(cluster_id).label = label
        self._rebuild()

    def set_name(self, cluster_id: str, name: str | None) -> None:
        self._review(cluster_id).assigned_name = name
        self._rebuild()

    def set_auto_promote(self, threshold: int | None) -> None:
        self.auto_promote_threshold = threshold
        self._rebuild()

    def merge_clusters(self, source: str, target: str) -> None:
        """Point ``source`` at ``target``; the merge root's review governs the
        combined entity. Mention counts are conserved up to exact-span
        duplicates."""
        if source == target:
            raise SelfMerge(f"cannot merge cluster {source!r} into itself")
        src = self._review(source)
        self._review(target)
        seen = {source}
        cursor = target
        while cursor is not None:
            if cursor in seen:
                raise CycleError(f"merging {source!r} into {target!r} would create a cycle")
            seen.add(cursor)
            cursor = self.reviews[cursor].merged_into
        src.merged_into = target
        self._rebuild()

    def _review(self, cluster_id: str) -> ClusterReview:
        try:
            return self.reviews[cluster_id]
        except KeyError:
            raise UnknownCluster(f"no cluster with id {cluster_id!r}") from None

    # -- derived views ------------------------------------------------------

    def root_of(self, cluster_id: str) -> str:
        cursor = self._review(cluster_id).cluster_id
        while self.reviews[cursor].merged_into is not None:
            cursor = self.reviews[cursor].merged_into
        return cursor

    def _rebuild(self) -> None:
        groups: dict[str, list[str]] = {}
        for cid in self._clusters:
            groups.setdefault(self.root_of(cid), []).append(cid)

        characters: list[Character] = []
        context_tags: list[ContextTag] = []
        for root, members in groups.items():
            review = self.reviews[root]
            spans = sorted(
                {(m.start, m.end) for cid in members for m in self._clusters[cid].mentions}
            )
            mentions = tuple(Span(s, e) for s, e in spans)
            name = review.assigned_name or self._clusters[root].hint or root
            if review.label == "character":
                characters.append(Character(root, name, frozenset(members), mentions))
            elif review.label == "context":
                context_tags.append(ContextTag(name, mentions))
            elif (
                review.label == "unreviewed"
                and self.auto_promote_threshold is not None
                and len(mentions) >= self.auto_promote_threshold
            ):
                characters.append(Character(root, name, frozenset(members), mentions, provisional=True))

        characters.sort(key=lambda c: (c.mentions[0].start if c.mentions else 0, c.id))
        context_tags.sort(key=lambda t: (t.mentions[0].start if t.mentions else 0, t.name))
        self._characters = {c.id: c for c in characters}
        self._context_tags = tuple(context_tags)

        exact: dict[tuple[int, int], str] = {}
        conflicts: dict[tuple[int, int], list[str]] = {}
        by_sentence: dict[int, list[tuple[Span, str]]] = {}
        for char in characters:
            for m in char.mentions:
                key = (m.start, m.end)
                if key in exact:
                    conflicts.setdefault(key, [exact[key]]).append(char.id)
                    continue
                exact[key] = char.id
                for s_idx in self._layer.sentences_overlapping(m):
                    by_sentence.setdefault(s_idx, []).append((m, char.id))
        self._exact = exact
        self._conflicts = {k: tuple(v) for k, v in conflicts.items()}
        self._by_sentence = by_sentence

    @property
    def characters(self) -> tuple[Character, ...]:
        return tuple(self._characters.values())

    @property
    def context_tags(self) -> tuple[ContextTag, ...]:
        return self._context_tags

    def character(self, character_id: str) -> Character:
        try:
            return self._characters[character_id]
        except KeyError:
            raise UnknownCluster(f"no character with id {character_id!r}") from None

    def conflicts(self) -> dict[tuple[int, int], tuple[str, ...]]:
        """Exact mention spans claimed by more than one character; left for
        the human to resolve by merging or relabeling."""
        return dict(self._conflicts)

    def list_clusters(self) -> list[dict]:
        """One review row per cluster, ordered by (source chapter, first
        mention offset), with up to five sample mention surfaces."""
        rows = []
        for cid, cluster in self._clusters.items():
            review = self.reviews[cid]
            first = cluster.mentions[0].start if cluster.mentions else 0
            chapter = cluster.source_chapter
            if chapter is None:
                chapter = self._doc.chapter_for_offset(first)
            rows.append(
                {
                    "cluster_id": cid,
                    "source_chapter": cluster.source_chapter,
                    "hint": cluster.hint,
                    "assigned_name": review.assigned_name,
                    "label": review.label,
                    "merged_into": review.merged_into,
                    "mention_count": len(cluster.mentions),
                    "samples": [
                        self._doc.text[m.start : m.end] for m in cluster.mentions[:SAMPLE_MENTIONS]
                    ],
                    "_sort": (chapter, first),
                }
            )
        rows.sort(key=lambda r: r.pop("_sort"))
        return rows

    def resolve(self, span: Span) -> str | None:
        """Character owning ``span``: exact mention match first, then the
        character whose mention contains the span's syntactic head token."""
        hit = self._exact.get((span.start, span.end))
        if hit is not None:
            return hit
        head_idx = self._layer.head_token_of_span(span)
        if head_idx is None:
            return None
        head_span = self._layer.tokens[head_idx].span
        candidates = self._by_sentence.get(self._layer.tokens[head_idx].sentence, ())
        best: tuple[int, str] | None = None
        for mention, char_id in candidates:
            if mention.contains(head_span):
                key = (len(mention), char_id)
                if best is None or key < best:
                    best = key
        return best[1] if best else None

    def suggest_merges(self, limit: int = 20) -> list[dict]:
        """Ranked cross-chapter merge suggestions by name-token overlap.

        Suggestions only; nothing is ever merged automatically.
        """
        def name_tokens(cid: str) -> frozenset[str]:
            review = self.reviews[cid]
            name = review.assigned_name or self._clusters[cid].hint or ""
            return frozenset(w.lower() for w in name.split() if len(w) > 1)

        roots = sorted({self.root_of(cid) for cid in self._clusters})
        scored = []
        for i, a in enumerate(roots):
            ta = name_tokens(a)
            if not ta:
                continue
            for b in roots[i + 1 :]:
                tb = name_tokens(b)
                if not tb:
                    continue
                overlap = len(ta & tb) / len(ta | tb)
                if overlap > 0:
                    scored.append({"source": b, "target": a, "score": round(overlap, 4)})
        scored.sort(key=lambda s: (-s["score"], s["target"], s["source"]))
        return scored[:limit]

    # -- persistence --------------------------------------------------------

    def reviews_to_list(self) -> list[dict]:
        return [self.reviews[cid].to_dict() for cid in sorted(self.reviews)]

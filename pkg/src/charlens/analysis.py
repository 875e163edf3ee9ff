"""Batch indicator computation over one project state.

``run_analysis`` executes every extractor and the temporal computations in
one pass and returns a flat, serializable :class:`AnalysisResult`. The
result is a pure function of (document, layer, registry state, config), so
rerunning at the same revision reproduces it bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import extractors
from .annotations import AnnotationLayer
from .corpus import Document, Span
from .dynamics import (
    EmbeddingTable,
    SmoothingConfig,
    action_change,
    choose_window,
    smooth_sentiment,
)
from .extractors import ActionRecord, DefinitionRecord, EmotionLabel, Quote, SentimentScore
from .registry import CharacterRegistry


@dataclass(frozen=True)
class AnalysisConfig:
    sentiment_lexicon: str | None = None  # TSV path; None loads the bundled set
    emotion_lexicon: str | None = None  # TSV path; None loads the bundled set
    embeddings: str | None = None  # embedding table path; None disables change metrics
    window: int | None = None  # smoothing window override
    seed: int = 13
    k: int | None = None  # word-zone cluster count override
    auto_promote_threshold: int | None = None
    presence_unit: str = "mentions"  # or "sentences"

    def to_dict(self) -> dict:
        return {
            "sentiment_lexicon": self.sentiment_lexicon,
            "emotion_lexicon": self.emotion_lexicon,
            "embeddings": self.embeddings,
            "window": self.window,
            "seed": self.seed,
            "k": self.k,
            "auto_promote_threshold": self.auto_promote_threshold,
            "presence_unit": self.presence_unit,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisConfig":
        return cls(
            sentiment_lexicon=data.get("sentiment_lexicon"),
            emotion_lexicon=data.get("emotion_lexicon"),
            embeddings=data.get("embeddings"),
            window=data.get("window"),
            seed=data.get("seed", 13),
            k=data.get("k"),
            auto_promote_threshold=data.get("auto_promote_threshold"),
            presence_unit=data.get("presence_unit", "mentions"),
        )


@dataclass(frozen=True)
class AnalysisResult:
    presence: dict[str, dict[int, int]]
    quotes: tuple[Quote, ...]
    actions: tuple[ActionRecord, ...]
    definitions: tuple[DefinitionRecord, ...]
    sentiments: tuple[SentimentScore, ...]  # one per sentence, in order
    emotions: tuple[EmotionLabel, ...]  # one per sentence, in order
    smoothed: tuple[float, ...]  # smoothed sentiment, one per sentence
    window: int
    #: character -> chapter i -> change vs chapter i-1 (None: not covered)
    action_changes: dict[str, dict[int, float | None]]

    def to_dict(self) -> dict:
        return {
            "presence": {c: {str(ch): n for ch, n in per.items()} for c, per in self.presence.items()},
            "quotes": [q.to_dict() for q in self.quotes],
            "actions": [a.to_dict() for a in self.actions],
            "definitions": [d.to_dict() for d in self.definitions],
            "sentiments": [s.to_dict() for s in self.sentiments],
            "emotions": [e.to_dict() for e in self.emotions],
            "smoothed": list(self.smoothed),
            "window": self.window,
            "action_changes": {
                c: {str(ch): v for ch, v in per.items()} for c, per in self.action_changes.items()
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisResult":
        return cls(
            presence={c: {int(ch): n for ch, n in per.items()} for c, per in data["presence"].items()},
            quotes=tuple(Quote.from_dict(q) for q in data["quotes"]),
            actions=tuple(ActionRecord.from_dict(a) for a in data["actions"]),
            definitions=tuple(DefinitionRecord.from_dict(d) for d in data["definitions"]),
            sentiments=tuple(SentimentScore.from_dict(s) for s in data["sentiments"]),
            emotions=tuple(EmotionLabel.from_dict(e) for e in data["emotions"]),
            smoothed=tuple(data["smoothed"]),
            window=data["window"],
            action_changes={
                c: {int(ch): v for ch, v in per.items()} for c, per in data["action_changes"].items()
            },
        )


@dataclass
class Snapshot:
    """Everything the view layer needs, frozen at one registry revision."""

    doc: Document
    layer: AnnotationLayer
    registry: CharacterRegistry
    result: AnalysisResult
    table: EmbeddingTable | None = None
    config: AnalysisConfig = field(default_factory=AnalysisConfig)

    def character_sentences(self, character: str) -> dict[int, list[Span]]:
        """Sentence index -> mention spans of the character in it."""
        out: dict[int, list[Span]] = {}
        for m in self.registry.character(character).mentions:
            s = self.layer.sentence_at(m.start)
            if s is not None:
                out.setdefault(s, []).append(m)
        return out


def run_analysis(
    doc: Document,
    layer: AnnotationLayer,
    registry: CharacterRegistry,
    config: AnalysisConfig,
    sentiment_lexicon: dict[str, float] | None,
    emotion_lexicon: dict[str, str] | None,
    table: EmbeddingTable | None = None,
) -> AnalysisResult:
    presence = extractors.presence(doc, layer, registry, unit=config.presence_unit)
    quotes = tuple(
        extractors.attribute_speaker(q, layer, registry) for q in extractors.extract_quotes(doc, layer)
    )
    actions = tuple(extractors.extract_actions(layer, registry))
    definitions = tuple(extractors.extract_definitions(layer, registry))
    sentiments = tuple(
        extractors.score_sentiment(s, layer, sentiment_lexicon) for s in range(len(layer.sentences))
    )
    emotions = tuple(
        extractors.label_emotion(s, layer, emotion_lexicon) for s in range(len(layer.sentences))
    )
    window = choose_window(doc, config.window)
    smoothed = tuple(smooth_sentiment([s.value for s in sentiments], SmoothingConfig(window=window)))

    action_changes: dict[str, dict[int, float | None]] = {}
    chapter_count = len(doc.chapters)
    by_char_chapter: dict[str, dict[int, list[str]]] = {}
    for a in actions:
        by_char_chapter.setdefault(a.character, {}).setdefault(a.chapter, []).append(a.verb_lemma.lower())
    for char in registry.characters:
        per: dict[int, float | None] = {}
        lemmas = by_char_chapter.get(char.id, {})
        for ch in range(1, chapter_count):
            if table is None:
                per[ch] = None
            else:
                per[ch] = action_change(lemmas.get(ch - 1, []), lemmas.get(ch, []), table)
        action_changes[char.id] = per

    return AnalysisResult(
        presence=presence,
        quotes=quotes,
        actions=actions,
        definitions=definitions,
        sentiments=sentiments,
        emotions=emotions,
        smoothed=smoothed,
        window=window,
        action_changes=action_changes,
    )

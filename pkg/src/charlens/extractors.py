"""The six trait-indicator record streams.

Each extractor is a pure function of (Document, AnnotationLayer,
CharacterRegistry) producing flat record lists: presence counts, direct
quotes with speaker attribution, agent-verb action pairs, adjective-subject
direct definitions, per-sentence sentiment, and per-sentence emotion. All
records carry spans back into the text so every downstream cell stays
evidence-linked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .annotations import EMOTIONS, AnnotationLayer
from .corpus import Document, Span
from .errors import LexiconMissing
from .registry import CharacterRegistry

#: First-person forms that mark the speaker inside a quote. "I" matches
#: case-sensitively; the rest are case-insensitive.
SELF_REFERENCE_UPPER = frozenset({"I"})
SELF_REFERENCE_LOWER = frozenset({"me", "my", "mine", "myself"})

#: Opening quotation mark -> required closing mark.
QUOTE_MARKS = {'"': '"', "“": "”"}

#: Normalization constant for the lexicon sentiment sum: value = s/sqrt(s^2+a).
SENTIMENT_ALPHA = 15.0

_NON_MAIN_VERB_DEPRELS = frozenset({"aux", "aux:pass", "auxpass", "cop"})
_NOUNISH = frozenset({"NOUN", "PROPN", "PRON"})


@dataclass(frozen=True)
class Quote:
    span: Span  # contents between the quotation marks
    sentences: tuple[int, ...]
    chapter: int
    speaker: str | None = None
    method: str = "unresolved"  # self_reference | verb_subject | unresolved
    evidence: Span | None = None
    ill_formed: bool = False

    def to_dict(self) -> dict:
        return {
            "span": self.span.as_pair(),
            "sentences": list(self.sentences),
            "chapter": self.chapter,
            "speaker": self.speaker,
            "method": self.method,
            "evidence": self.evidence.as_pair() if self.evidence else None,
            "ill_formed": self.ill_formed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Quote":
        return cls(
            span=Span(*data["span"]),
            sentences=tuple(data["sentences"]),
            chapter=data["chapter"],
            speaker=data["speaker"],
            method=data["method"],
            evidence=Span(*data["evidence"]) if data["evidence"] else None,
            ill_formed=data["ill_formed"],
        )


@dataclass(frozen=True)
class ActionRecord:
    character: str
    verb_lemma: str
    verb_span: Span
    sentence: int
    chapter: int
    source: str  # proposition | dependency_fallback

    def to_dict(self) -> dict:
        return {
            "character": self.character,
            "verb_lemma": self.verb_lemma,
            "verb_span": self.verb_span.as_pair(),
            "sentence": self.sentence,
            "chapter": self.chapter,
            "source": self.source,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ActionRecord":
        return cls(
            character=data["character"],
            verb_lemma=data["verb_lemma"],
            verb_span=Span(*data["verb_span"]),
            sentence=data["sentence"],
            chapter=data["chapter"],
            source=data["source"],
        )


@dataclass(frozen=True)
class DefinitionRecord:
    character: str
    adjective_lemma: str
    adjective_span: Span
    path: str  # copular | modifier | ascend_to_verb
    sentence: int

    def to_dict(self) -> dict:
        return {
            "character": self.character,
            "adjective_lemma": self.adjective_lemma,
            "adjective_span": self.adjective_span.as_pair(),
            "path": self.path,
            "sentence": self.sentence,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DefinitionRecord":
        return cls(
            character=data["character"],
            adjective_lemma=data["adjective_lemma"],
            adjective_span=Span(*data["adjective_span"]),
            path=data["path"],
            sentence=data["sentence"],
        )


@dataclass(frozen=True)
class SentimentScore:
    sentence: int
    value: float  # in [-1, +1]
    contributions: tuple[tuple[Span, float], ...]
    source: str  # lexicon | external

    def to_dict(self) -> dict:
        return {
            "sentence": self.sentence,
            "value": self.value,
            "contributions": [[span.as_pair(), score] for span, score in self.contributions],
            "source": self.source,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SentimentScore":
        return cls(
            sentence=data["sentence"],
            value=data["value"],
            contributions=tuple((Span(*pair), score) for pair, score in data["contributions"]),
            source=data["source"],
        )


@dataclass(frozen=True)
class EmotionLabel:
    sentence: int
    label: str | None
    source: str  # lexicon | external

    def to_dict(self) -> dict:
        return {"sentence": self.sentence, "label": self.label, "source": self.source}

    @classmethod
    def from_dict(cls, data: dict) -> "EmotionLabel":
        return cls(sentence=data["sentence"], label=data["label"], source=data["source"])


# ---------------------------------------------------------------------------
# presence


def presence(
    doc: Document,
    layer: AnnotationLayer,
    registry: CharacterRegistry,
    unit: str = "mentions",
) -> dict[str, dict[int, int]]:
    """Per-chapter mention counts for every character.

    A mention is assigned to the chapter containing its start; mentions
    falling in a heading gap count toward the chapter that heading opens, so
    chapter totals always sum to the character's full mention count.
    ``unit="sentences"`` counts distinct sentences with at least one mention
    instead of raw mentions.
    """
    counts: dict[str, dict[int, int]] = {}
    for char in registry.characters:
        per_chapter: dict[int, int] = {}
        if unit == "sentences":
            seen: set[int] = set()
            for m in char.mentions:
                s = layer.sentence_at(m.start)
                if s is None or s in seen:
                    continue
                seen.add(s)
                ch = layer.sentences[s].chapter
                per_chapter[ch] = per_chapter.get(ch, 0) + 1
        else:
            for m in char.mentions:
                ch = doc.chapter_for_offset(m.start)
                per_chapter[ch] = per_chapter.get(ch, 0) + 1
        counts[char.id] = per_chapter
    return counts


# ---------------------------------------------------------------------------
# direct speech


def extract_quotes(doc: Document, layer: AnnotationLayer) -> list[Quote]:
    """Find direct quotes by pairing quotation marks within each chapter.

    Straight and curly double quotes are both recognized; single quotes never
    open or close a quote, so nested dialogue cannot terminate the outer
    span. An opening mark left unclosed at the chapter end yields an
    ``ill_formed`` quote truncated at the chapter boundary.
    """
    quotes: list[Quote] = []

    def emit(start: int, end: int, chapter: int, ill_formed: bool):
        if start >= end:
            return
        span = Span(start, end)
        quotes.append(
            Quote(
                span=span,
                sentences=tuple(layer.sentences_overlapping(span)),
                chapter=chapter,
                ill_formed=ill_formed,
            )
        )

    for chapter in doc.chapters:
        open_at: int | None = None
        closer = ""
        for i in range(chapter.span.start, chapter.span.end):
            c = doc.text[i]
            if open_at is None:
                if c in QUOTE_MARKS:
                    open_at = i
                    closer = QUOTE_MARKS[c]
            elif c == closer:
                emit(open_at + 1, i, chapter.index, ill_formed=False)
                open_at = None
        if open_at is not None:
            emit(open_at + 1, chapter.span.end, chapter.index, ill_formed=True)
    return quotes


def _self_reference_speaker(quote: Quote, layer: AnnotationLayer, registry: CharacterRegistry):
    for idx in layer.tokens_in_span(quote.span):
        tok = layer.tokens[idx]
        if tok.surface in SELF_REFERENCE_UPPER or tok.surface.lower() in SELF_REFERENCE_LOWER:
            owner = registry.resolve(tok.span)
            if owner is not None:
                return owner, tok.span
    return None, None


def _nearest_verb_speaker(quote: Quote, layer: AnnotationLayer, registry: CharacterRegistry):
    # search window: sentences overlapping the quote plus the sentences
    # holding the quotation marks themselves
    lo = max(quote.span.start - 1, 0)
    hi = quote.span.end + 1
    window = layer.sentences_overlapping(Span(lo, hi)) if hi > lo else list(quote.sentences)
    candidates: list[int] = []
    for s_idx in window:
        t_lo, t_hi = layer.sentences[s_idx].token_range
        candidates.extend(range(t_lo, t_hi))

    before = [i for i in candidates if layer.tokens[i].span.end <= quote.span.start]
    after = [i for i in candidates if layer.tokens[i].span.start >= quote.span.end]

    verb_idx: int | None = None
    for d in range(max(len(before), len(after))):
        # equal distance prefers the following verb ("..." said X)
        if d < len(after) and layer.tokens[after[d]].pos == "VERB":
            verb_idx = after[d]
            break
        if d < len(before) and layer.tokens[before[len(before) - 1 - d]].pos == "VERB":
            verb_idx = before[len(before) - 1 - d]
            break
    if verb_idx is None:
        return None, None
    subject = layer.nominal_subject_of(verb_idx)
    if subject is None:
        return None, None
    subject_span = layer.tokens[subject].span
    return registry.resolve(subject_span), subject_span


def attribute_speaker(quote: Quote, layer: AnnotationLayer, registry: CharacterRegistry) -> Quote:
    """Fill speaker and method on a quote.

    First-person forms inside the quote win when they sit inside a character
    mention; otherwise the nearest verb outside the quote (by token distance,
    ties preferring the following side) contributes its nominal subject,
    resolved through the registry. Anything else stays unresolved.
    """
    speaker, evidence = _self_reference_speaker(quote, layer, registry)
    if speaker is not None:
        return replace(quote, speaker=speaker, method="self_reference", evidence=evidence)
    speaker, evidence = _nearest_verb_speaker(quote, layer, registry)
    if speaker is not None:
        return replace(quote, speaker=speaker, method="verb_subject", evidence=evidence)
    return replace(quote, speaker=None, method="unresolved", evidence=None)


# ---------------------------------------------------------------------------
# actions


def extract_actions(layer: AnnotationLayer, registry: CharacterRegistry) -> list[ActionRecord]:
    """Agent-verb pairs per character.

    Sentences with propositions contribute one record per (ARG0, V) pair
    whose agent resolves to a character; sentences without any proposition
    fall back to dependency structure (main verbs with a resolvable nominal
    subject). The two paths never both fire on one sentence.
    """
    records: list[ActionRecord] = []
    seen: set[tuple[str, int, int, int]] = set()

    def emit(character: str, verb_idx: int, sentence: int, source: str):
        tok = layer.tokens[verb_idx]
        key = (character, tok.span.start, tok.span.end, sentence)
        if key in seen:
            return
        seen.add(key)
        records.append(
            ActionRecord(
                character=character,
                verb_lemma=tok.lemma,
                verb_span=tok.span,
                sentence=sentence,
                chapter=layer.sentences[sentence].chapter,
                source=source,
            )
        )

    for s in range(len(layer.sentences)):
        props = layer.propositions_by_sentence.get(s)
        if props:
            for prop in props:
                agent = prop.role_span("ARG0")
                verb = prop.role_span("V")
                if agent is None or verb is None:
                    continue
                character = registry.resolve(agent)
                if character is None:
                    continue
                verb_tokens = [i for i in layer.tokens_in_span(verb) if layer.tokens[i].pos == "VERB"]
                if not verb_tokens:
                    continue  # auxiliary-only predicate
                emit(character, verb_tokens[-1], s, "proposition")
        else:
            t_lo, t_hi = layer.sentences[s].token_range
            for i in range(t_lo, t_hi):
                tok = layer.tokens[i]
                if tok.pos != "VERB" or tok.deprel in _NON_MAIN_VERB_DEPRELS:
                    continue
                subject = layer.nominal_subject_of(i)
                if subject is None:
                    continue
                character = registry.resolve(layer.tokens[subject].span)
                if character is None:
                    continue
                emit(character, i, s, "dependency_fallback")
    return records


# ---------------------------------------------------------------------------
# direct definition


def extract_definitions(layer: AnnotationLayer, registry: CharacterRegistry) -> list[DefinitionRecord]:
    """Adjective-subject pairs per character.

    For each adjective, in order: its own nominal subject (predicate
    adjective), the noun or pronoun it directly modifies, or the nominal
    subject of the first verb found walking up the head links. The first
    path that produces a subject decides; a subject that resolves to no
    character drops the adjective.
    """
    records: list[DefinitionRecord] = []
    for idx, tok in enumerate(layer.tokens):
        if tok.pos != "ADJ":
            continue
        subject: int | None = None
        path = ""
        own_subject = layer.nominal_subject_of(idx)
        if own_subject is not None:
            subject, path = own_subject, "copular"
        else:
            head = layer.head_index(idx)
            if head != idx and layer.tokens[head].pos in _NOUNISH:
                subject, path = head, "modifier"
            else:
                size = len(layer.sentence_tokens(tok.sentence))
                cursor = idx
                for _ in range(size):
                    nxt = layer.head_index(cursor)
                    if nxt == cursor:
                        break
                    cursor = nxt
                    if layer.tokens[cursor].pos in ("VERB", "AUX"):
                        verb_subject = layer.nominal_subject_of(cursor)
                        if verb_subject is not None:
                            subject, path = verb_subject, "ascend_to_verb"
                        break
        if subject is None:
            continue
        character = registry.resolve(layer.tokens[subject].span)
        if character is None:
            continue
        records.append(
            DefinitionRecord(
                character=character,
                adjective_lemma=tok.lemma,
                adjective_span=tok.span,
                path=path,
                sentence=tok.sentence,
            )
        )
    return records


# ---------------------------------------------------------------------------
# sentiment and emotion


def score_sentiment(
    sentence: int, layer: AnnotationLayer, lexicon: dict[str, float] | None
) -> SentimentScore:
    """Sentence sentiment in [-1, +1].

    An external score passes through untouched. The lexicon path sums the
    word scores s and squashes with s/sqrt(s^2 + 15), keeping per-token
    contributions so the value stays explainable.
    """
    row = layer.score_for(sentence)
    if row is not None and row.sentiment is not None:
        return SentimentScore(sentence=sentence, value=row.sentiment, contributions=(), source="external")
    if lexicon is None:
        raise LexiconMissing(f"sentence {sentence} has no external score and no lexicon is loaded")
    contributions = []
    total = 0.0
    for tok in layer.sentence_tokens(sentence):
        score = lexicon.get(tok.lemma.lower())
        if score is None:
            continue
        total += score
        contributions.append((tok.span, score))
    value = total / math.sqrt(total * total + SENTIMENT_ALPHA) if contributions else 0.0
    return SentimentScore(sentence=sentence, value=value, contributions=tuple(contributions), source="lexicon")


def label_emotion(
    sentence: int, layer: AnnotationLayer, emotion_lexicon: dict[str, str] | None
) -> EmotionLabel:
    """Sentence emotion over the six fixed categories.

    External labels pass through; otherwise the category with the most
    lexicon hits wins, ties resolved by the fixed category order, and zero
    hits leave the label absent.
    """
    row = layer.score_for(sentence)
    if row is not None and row.emotion is not None:
        return EmotionLabel(sentence=sentence, label=row.emotion, source="external")
    if emotion_lexicon is None:
        return EmotionLabel(sentence=sentence, label=None, source="lexicon")
    counts = {category: 0 for category in EMOTIONS}
    for tok in layer.sentence_tokens(sentence):
        category = emotion_lexicon.get(tok.lemma.lower())
        if category is not None:
            counts[category] += 1
    best = max(EMOTIONS, key=lambda category: counts[category])
    if counts[best] == 0:
        return EmotionLabel(sentence=sentence, label=None, source="lexicon")
    return EmotionLabel(sentence=sentence, label=best, source="lexicon")

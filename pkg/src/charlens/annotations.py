"""Standoff annotation interchange: parsing and validation.

Externally produced linguistic analyses (tokens, dependency trees, sentence
segmentation, coreference clusters, predicate-argument propositions, optional
per-sentence scores) arrive as a versioned JSON payload addressing the
document by character offsets. Parsing is strict: a payload that violates the
schema or the document geometry is rejected, never repaired. Softer issues
(mentions that split tokens or sit in a chapter gap) become warnings so the
registry can still operate on them.

Interchange schema, ``format_version: 1``::

    {
      "format_version": 1,
      "tokens":       [{"start", "end", "surface", "lemma", "pos", "head",
                        "deprel", "sentence"}],
      "sentences":    [{"start", "end", "chapter"}],
      "clusters":     [{"id", "mentions": [[start, end], ...],
                        "source_chapter", "hint"}],
      "propositions": [{"sentence", "args": [{"role", "start", "end"}]}],
      "scores":       [{"sentence", "sentiment"?, "emotion"?}]
    }

``head`` is a sentence-local token index (self-index marks the root). All
offsets are unicode scalar offsets into ``Document.text``.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import cached_property

from .corpus import Document, Span
from .errors import OffsetError, RangeError, SchemaError, TreeError
from .jsonio import canonical_bytes

FORMAT_VERSION = 1

UPOS_TAGS = frozenset(
    "ADJ ADP ADV AUX CCONJ DET INTJ NOUN NUM PART PRON PROPN PUNCT SCONJ SYM VERB X".split()
)

#: Fixed emotion category inventory; the declaration order is also the
#: tie-break order used when labeling sentences.
EMOTIONS = ("joy", "sadness", "love", "anger", "fear", "surprise")

#: Dependency relations treated as "nominal subject" edges.
NSUBJ_RELATIONS = frozenset({"nsubj", "nsubjpass", "nsubj:pass", "nsubj:outer"})


@dataclass(frozen=True)
class Token:
    span: Span
    surface: str
    lemma: str
    pos: str
    head: int  # sentence-local index; self-index for the root
    deprel: str
    sentence: int


@dataclass(frozen=True)
class SentenceAnn:
    index: int
    span: Span
    chapter: int
    token_range: tuple[int, int]  # global [first, last) token indices


@dataclass(frozen=True)
class CorefCluster:
    id: str
    mentions: tuple[Span, ...]
    source_chapter: int | None
    hint: str | None


@dataclass(frozen=True)
class Proposition:
    sentence: int
    args: tuple[tuple[str, Span], ...]  # (role, span), ordered as supplied

    def role_span(self, role: str) -> Span | None:
        for r, span in self.args:
            if r == role:
                return span
        return None


@dataclass(frozen=True)
class ScoreRow:
    sentence: int
    sentiment: float | None
    emotion: str | None


@dataclass(frozen=True)
class Finding:
    severity: str  # "error" | "warning"
    code: str
    message: str
    location: str


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "error")

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "warning")

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def empty(self) -> bool:
        return not self.findings

    def to_dict(self) -> dict:
        return {
            "findings": [
                {"severity": f.severity, "code": f.code, "message": f.message, "location": f.location}
                for f in self.findings
            ]
        }


@dataclass(frozen=True)
class AnnotationLayer:
    tokens: tuple[Token, ...]
    sentences: tuple[SentenceAnn, ...]
    clusters: tuple[CorefCluster, ...]
    propositions: tuple[Proposition, ...]
    scores: tuple[ScoreRow, ...]
    format_version: int = FORMAT_VERSION

    # -- lookup helpers (cached, all pure) --------------------------------

    @cached_property
    def _score_by_sentence(self) -> dict[int, ScoreRow]:
        return {row.sentence: row for row in self.scores}

    def score_for(self, sentence: int) -> ScoreRow | None:
        return self._score_by_sentence.get(sentence)

    @cached_property
    def _sentence_starts(self) -> list[int]:
        return [s.span.start for s in self.sentences]

    def sentence_at(self, offset: int) -> int | None:
        i = bisect_right(self._sentence_starts, offset) - 1
        if i >= 0 and self.sentences[i].span.start <= offset < self.sentences[i].span.end:
            return i
        return None

    def sentences_overlapping(self, span: Span) -> list[int]:
        out = []
        i = max(bisect_right(self._sentence_starts, span.start) - 1, 0)
        for s in self.sentences[i:]:
            if s.span.start >= span.end:
                break
            if s.span.overlaps(span):
                out.append(s.index)
        return out

    def sentence_tokens(self, sentence: int) -> tuple[Token, ...]:
        lo, hi = self.sentences[sentence].token_range
        return self.tokens[lo:hi]

    @cached_property
    def propositions_by_sentence(self) -> dict[int, tuple[Proposition, ...]]:
        grouped: dict[int, list[Proposition]] = {}
        for prop in self.propositions:
            grouped.setdefault(prop.sentence, []).append(prop)
        return {k: tuple(v) for k, v in grouped.items()}

    def tokens_in_span(self, span: Span) -> list[int]:
        """Global indices of tokens lying fully inside ``span``, in order."""
        hits = []
        for s_idx in self.sentences_overlapping(span):
            lo, hi = self.sentences[s_idx].token_range
            for i in range(lo, hi):
                if span.contains(self.tokens[i].span):
                    hits.append(i)
        return hits

    def head_index(self, idx: int) -> int:
        """Global index of the head of token ``idx`` (self for the root)."""
        tok = self.tokens[idx]
        lo, _hi = self.sentences[tok.sentence].token_range
        return lo + tok.head

    def head_token_of_span(self, span: Span) -> int | None:
        """The syntactic head among tokens inside ``span``: the first token
        whose head link leaves the span (or is the sentence root)."""
        inside = self.tokens_in_span(span)
        if not inside:
            return None
        for idx in inside:
            head = self.head_index(idx)
            if head == idx or not span.contains(self.tokens[head].span):
                return idx
        return inside[0]

    def children_of(self, idx: int) -> list[int]:
        tok = self.tokens[idx]
        lo, hi = self.sentences[tok.sentence].token_range
        local = idx - lo
        return [i for i in range(lo, hi) if i != idx and self.tokens[i].head == local]

    def nominal_subject_of(self, idx: int) -> int | None:
        for child in self.children_of(idx):
            if self.tokens[child].deprel in NSUBJ_RELATIONS:
                return child
        return None

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "format_version": self.format_version,
            "tokens": [
                {
                    "start": t.span.start,
                    "end": t.span.end,
                    "surface": t.surface,
                    "lemma": t.lemma,
                    "pos": t.pos,
                    "head": t.head,
                    "deprel": t.deprel,
                    "sentence": t.sentence,
                }
                for t in self.tokens
            ],
            "sentences": [
                {"start": s.span.start, "end": s.span.end, "chapter": s.chapter} for s in self.sentences
            ],
            "clusters": [
                {
                    "id": c.id,
                    "mentions": [m.as_pair() for m in c.mentions],
                    "source_chapter": c.source_chapter,
                    "hint": c.hint,
                }
                for c in self.clusters
            ],
            "propositions": [
                {
                    "sentence": p.sentence,
                    "args": [{"role": role, "start": span.start, "end": span.end} for role, span in p.args],
                }
                for p in self.propositions
            ],
            "scores": [
                {
                    "sentence": row.sentence,
                    **({"sentiment": row.sentiment} if row.sentiment is not None else {}),
                    **({"emotion": row.emotion} if row.emotion is not None else {}),
                }
                for row in self.scores
            ],
        }


def serialize_annotations(layer: AnnotationLayer) -> bytes:
    return canonical_bytes(layer.to_dict())


# ---------------------------------------------------------------------------
# decoding


def _require(obj: dict, key: str, kinds: tuple[type, ...], where: str):
    if key not in obj:
        raise SchemaError(f"missing field '{key}'", location=where)
    value = obj[key]
    if not isinstance(value, kinds) or isinstance(value, bool) and bool not in kinds:
        raise SchemaError(f"field '{key}' has wrong type", location=where)
    return value


def _span(start, end, where: str) -> Span:
    if not isinstance(start, int) or not isinstance(end, int) or isinstance(start, bool) or isinstance(end, bool):
        raise SchemaError("span offsets must be integers", location=where)
    try:
        return Span(start, end)
    except ValueError as exc:
        raise OffsetError(str(exc), location=where) from exc


def _decode(payload: bytes | str) -> dict:
    if isinstance(payload, bytes):
        try:
            payload = payload.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"payload is not valid UTF-8: {exc}") from exc
    try:
        data = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"payload is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("top-level payload must be an object")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise SchemaError(f"unsupported format_version {version!r}")
    return data


def _build_layer(data: dict) -> AnnotationLayer:
    raw_tokens = data.get("tokens", [])
    raw_sentences = data.get("sentences", [])
    raw_clusters = data.get("clusters", [])
    raw_props = data.get("propositions", [])
    raw_scores = data.get("scores", [])
    for name, raw in (
        ("tokens", raw_tokens),
        ("sentences", raw_sentences),
        ("clusters", raw_clusters),
        ("propositions", raw_props),
        ("scores", raw_scores),
    ):
        if not isinstance(raw, list):
            raise SchemaError(f"'{name}' must be an array")

    tokens = []
    for i, item in enumerate(raw_tokens):
        where = f"tokens[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("token must be an object", location=where)
        tokens.append(
            Token(
                span=_span(_require(item, "start", (int,), where), _require(item, "end", (int,), where), where),
                surface=_require(item, "surface", (str,), where),
                lemma=_require(item, "lemma", (str,), where),
                pos=_require(item, "pos", (str,), where),
                head=_require(item, "head", (int,), where),
                deprel=_require(item, "deprel", (str,), where),
                sentence=_require(item, "sentence", (int,), where),
            )
        )

    # token_range gets filled once grouping has been checked
    sentences = []
    for i, item in enumerate(raw_sentences):
        where = f"sentences[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("sentence must be an object", location=where)
        sentences.append(
            SentenceAnn(
                index=i,
                span=_span(_require(item, "start", (int,), where), _require(item, "end", (int,), where), where),
                chapter=_require(item, "chapter", (int,), where),
                token_range=(0, 0),
            )
        )

    clusters = []
    for i, item in enumerate(raw_clusters):
        where = f"clusters[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("cluster must be an object", location=where)
        cid = _require(item, "id", (str,), where)
        raw_mentions = _require(item, "mentions", (list,), where)
        mentions = []
        for j, pair in enumerate(raw_mentions):
            if not isinstance(pair, list) or len(pair) != 2:
                raise SchemaError("mention must be a [start, end] pair", location=f"{where}.mentions[{j}]")
            mentions.append(_span(pair[0], pair[1], f"{where}.mentions[{j}]"))
        source_chapter = item.get("source_chapter")
        if source_chapter is not None and (not isinstance(source_chapter, int) or isinstance(source_chapter, bool)):
            raise SchemaError("source_chapter must be an integer or null", location=where)
        hint = item.get("hint")
        if hint is not None and not isinstance(hint, str):
            raise SchemaError("hint must be a string or null", location=where)
        clusters.append(CorefCluster(id=cid, mentions=tuple(mentions), source_chapter=source_chapter, hint=hint))

    propositions = []
    for i, item in enumerate(raw_props):
        where = f"propositions[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("proposition must be an object", location=where)
        sentence = _require(item, "sentence", (int,), where)
        raw_args = _require(item, "args", (list,), where)
        args = []
        for j, arg in enumerate(raw_args):
            arg_where = f"{where}.args[{j}]"
            if not isinstance(arg, dict):
                raise SchemaError("argument must be an object", location=arg_where)
            role = _require(arg, "role", (str,), arg_where)
            span = _span(_require(arg, "start", (int,), arg_where), _require(arg, "end", (int,), arg_where), arg_where)
            args.append((role, span))
        propositions.append(Proposition(sentence=sentence, args=tuple(args)))

    scores = []
    for i, item in enumerate(raw_scores):
        where = f"scores[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("score row must be an object", location=where)
        sentence = _require(item, "sentence", (int,), where)
        sentiment = item.get("sentiment")
        if sentiment is not None:
            if isinstance(sentiment, bool) or not isinstance(sentiment, (int, float)):
                raise SchemaError("sentiment must be a number", location=where)
            sentiment = float(sentiment)
        emotion = item.get("emotion")
        if emotion is not None and not isinstance(emotion, str):
            raise SchemaError("emotion must be a string", location=where)
        scores.append(ScoreRow(sentence=sentence, sentiment=sentiment, emotion=emotion))

    return AnnotationLayer(
        tokens=tuple(tokens),
        sentences=tuple(sentences),
        clusters=tuple(clusters),
        propositions=tuple(propositions),
        scores=tuple(scores),
    )


def _fill_token_ranges(layer: AnnotationLayer) -> AnnotationLayer:
    """Derive each sentence's global token range; requires grouped tokens."""
    ranges = [(0, 0)] * len(layer.sentences)
    i = 0
    n = len(layer.tokens)
    for s in range(len(layer.sentences)):
        start = i
        while i < n and layer.tokens[i].sentence == s:
            i += 1
        ranges[s] = (start, i)
    sentences = tuple(
        SentenceAnn(index=s.index, span=s.span, chapter=s.chapter, token_range=ranges[s.index])
        for s in layer.sentences
    )
    return AnnotationLayer(
        tokens=layer.tokens,
        sentences=sentences,
        clusters=layer.clusters,
        propositions=layer.propositions,
        scores=layer.scores,
        format_version=layer.format_version,
    )


# ---------------------------------------------------------------------------
# validation

_ERROR_CLASS = {"schema": SchemaError, "offset": OffsetError, "tree": TreeError, "range": RangeError}


def _check(layer: AnnotationLayer, doc: Document) -> list[Finding]:
    findings: list[Finding] = []
    n = len(doc.text)

    def err(kind: str, code: str, message: str, location: str):
        findings.append(Finding("error", f"{kind}:{code}", message, location))

    def warn(code: str, message: str, location: str):
        findings.append(Finding("warning", code, message, location))

    # sentences: ordered, non-overlapping, inside the document and one chapter
    prev_end = -1
    for s in layer.sentences:
        where = f"sentences[{s.index}]"
        if s.span.end > n:
            err("offset", "sentence_bounds", "sentence span exceeds document", where)
            continue
        if s.span.start < prev_end:
            err("schema", "sentence_overlap", "sentences overlap or are unordered", where)
        prev_end = max(prev_end, s.span.end)
        if not 0 <= s.chapter < len(doc.chapters):
            err("schema", "sentence_chapter", f"unknown chapter {s.chapter}", where)
        elif not doc.chapters[s.chapter].span.contains(s.span):
            err("offset", "sentence_chapter_bounds", "sentence not inside its declared chapter", where)

    # tokens: grouped by sentence, ordered, inside their sentence, surfaces match
    prev_sentence = 0
    prev_start = -1
    seen_sentences: set[int] = set()
    for i, t in enumerate(layer.tokens):
        where = f"tokens[{i}]"
        if not 0 <= t.sentence < len(layer.sentences):
            err("schema", "token_sentence", f"unknown sentence {t.sentence}", where)
            continue
        if t.sentence < prev_sentence or (t.sentence in seen_sentences and t.sentence != prev_sentence):
            err("schema", "token_grouping", "tokens are not grouped by sentence in order", where)
        if t.sentence == prev_sentence and t.span.start < prev_start:
            err("schema", "token_order", "tokens unordered within sentence", where)
        if t.sentence != prev_sentence:
            seen_sentences.add(prev_sentence)
            prev_start = -1
        prev_sentence = t.sentence
        prev_start = max(prev_start, t.span.start)
        if t.span.end > n:
            err("offset", "token_bounds", "token span exceeds document", where)
            continue
        if doc.text[t.span.start : t.span.end] != t.surface:
            err(
                "offset",
                "surface_mismatch",
                f"surface {t.surface!r} does not match text {doc.text[t.span.start:t.span.end]!r}",
                where,
            )
        sent = layer.sentences[t.sentence]
        if sent.span.end <= n and not sent.span.contains(t.span):
            err("offset", "token_outside_sentence", "token span outside its sentence", where)
        if t.pos not in UPOS_TAGS:
            err("schema", "unknown_pos", f"'{t.pos}' is not a universal POS tag", where)

    # dependency trees, per sentence
    for s in layer.sentences:
        lo, hi = s.token_range
        toks = layer.tokens[lo:hi]
        if not toks:
            continue
        where = f"sentences[{s.index}]"
        size = len(toks)
        bad_head = False
        for j, t in enumerate(toks):
            if not 0 <= t.head < size:
                err("tree", "dangling_head", f"head {t.head} outside sentence of {size} tokens", f"tokens[{lo + j}]")
                bad_head = True
        if bad_head:
            continue
        roots = [j for j, t in enumerate(toks) if t.head == j]
        if len(roots) != 1:
            err("tree", "root_count", f"sentence has {len(roots)} roots, expected 1", where)
            continue
        for j in range(size):
            seen = 0
            k = j
            while toks[k].head != k:
                k = toks[k].head
                seen += 1
                if seen > size:
                    err("tree", "cycle", "dependency head links form a cycle", f"tokens[{lo + j}]")
                    break

    # clusters
    seen_ids: set[str] = set()
    token_starts = {t.span.start for t in layer.tokens}
    token_ends = {t.span.end for t in layer.tokens}
    for c in layer.clusters:
        where = f"clusters[{c.id}]"
        if not c.id:
            err("schema", "cluster_id", "cluster id is empty", where)
        if c.id in seen_ids:
            err("schema", "cluster_id_dup", f"duplicate cluster id {c.id!r}", where)
        seen_ids.add(c.id)
        if not c.mentions:
            err("schema", "cluster_empty", "cluster has no mentions", where)
            continue
        if c.source_chapter is not None and not 0 <= c.source_chapter < len(doc.chapters):
            err("schema", "cluster_chapter", f"unknown source chapter {c.source_chapter}", where)
        prev = -1
        seen_spans: set[tuple[int, int]] = set()
        for j, m in enumerate(c.mentions):
            m_where = f"{where}.mentions[{j}]"
            if m.end > n:
                err("offset", "mention_bounds", "mention span exceeds document", m_where)
                continue
            if m.start < prev:
                err("schema", "mention_order", "mentions not sorted by start", m_where)
            prev = m.start
            if (m.start, m.end) in seen_spans:
                warn("mention_duplicate", "duplicate mention span in cluster", m_where)
            seen_spans.add((m.start, m.end))
            start_ch = doc.chapter_at(m.start)
            end_ch = doc.chapter_at(m.end - 1)
            if start_ch is None or end_ch is None or start_ch != end_ch:
                warn("mention_in_gap", "mention overlaps a chapter gap (heading block)", m_where)
            if m.start not in token_starts or m.end not in token_ends:
                warn("mention_midtoken", "mention does not align with token boundaries", m_where)

    # propositions
    for i, p in enumerate(layer.propositions):
        where = f"propositions[{i}]"
        if not 0 <= p.sentence < len(layer.sentences):
            err("schema", "proposition_sentence", f"unknown sentence {p.sentence}", where)
            continue
        v_count = sum(1 for role, _ in p.args if role == "V")
        if v_count > 1:
            err("schema", "proposition_verbs", f"proposition has {v_count} V roles", where)
        sent_span = layer.sentences[p.sentence].span
        for j, (_role, span) in enumerate(p.args):
            if span.end > n or not sent_span.contains(span):
                err("offset", "argument_bounds", "argument span outside its sentence", f"{where}.args[{j}]")

    # scores
    seen_score_sentences: set[int] = set()
    for i, row in enumerate(layer.scores):
        where = f"scores[{i}]"
        if not 0 <= row.sentence < len(layer.sentences):
            err("schema", "score_sentence", f"unknown sentence {row.sentence}", where)
        if row.sentence in seen_score_sentences:
            err("schema", "score_duplicate", f"multiple score rows for sentence {row.sentence}", where)
        seen_score_sentences.add(row.sentence)
        if row.sentiment is not None and not -1.0 <= row.sentiment <= 1.0:
            err("range", "sentiment_range", f"sentiment {row.sentiment} outside [-1, +1]", where)
        if row.emotion is not None and row.emotion not in EMOTIONS:
            err("range", "emotion_label", f"unknown emotion {row.emotion!r}", where)

    return findings


def validate(layer: AnnotationLayer, doc: Document) -> ValidationReport:
    """Report every violated invariant; empty iff the layer is fully
    consistent with the document (warnings included)."""
    return ValidationReport(tuple(_check(layer, doc)))


def parse_annotations(payload: bytes | str, doc: Document) -> AnnotationLayer:
    """Parse and validate an interchange payload against ``doc``.

    Raises SchemaError / OffsetError / TreeError / RangeError on the first
    hard violation; mention-level alignment issues are warnings and do not
    reject the payload.
    """
    data = _decode(payload)
    layer = _fill_token_ranges(_build_layer(data))
    for finding in _check(layer, doc):
        if finding.severity != "error":
            continue
        kind, _, code = finding.code.partition(":")
        raise _ERROR_CLASS[kind](f"{code}: {finding.message}", location=finding.location)
    return layer

"""Project lifecycle and single-file persistence.

A project bundles one document with its annotation layer, the registry
review state, the analysis configuration, and cached indicator records. A
monotone revision counter tracks accepted mutations; analysis results
remember the revision they were computed at, which is all the staleness
tracking the service needs. Drafts are private, so persistence is one
self-contained JSON file rather than a shared database.
"""

from __future__ import annotations

import json
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import AnalysisConfig, AnalysisResult, Snapshot, run_analysis
from .annotations import AnnotationLayer, parse_annotations
from .corpus import Document, IngestConfig, ingest_text
from .dynamics import EmbeddingTable, load_embeddings
from .errors import CharlensError, CorruptFile, NotReady, VersionUnsupported
from .jsonio import canonical_bytes
from .lexicons import load_emotion_lexicon, load_sentiment_lexicon
from .registry import CharacterRegistry, ClusterReview

FILE_VERSION = 1


@dataclass
class AnalysisStatus:
    state: str  # empty | stale | current
    last_run: int | None

    def to_dict(self) -> dict:
        return {"state": self.state, "last_run": self.last_run}


@dataclass
class Project:
    id: str
    doc: Document
    ingest_config: IngestConfig = field(default_factory=IngestConfig)
    config: AnalysisConfig = field(default_factory=AnalysisConfig)
    layer: AnnotationLayer | None = None
    registry: CharacterRegistry | None = None
    result: AnalysisResult | None = None
    revision: int = 0
    last_run: int | None = None
    _table: EmbeddingTable | None = field(default=None, repr=False, compare=False)

    # -- lifecycle ----------------------------------------------------------

    @classmethod
    def create(
        cls,
        text: str,
        ingest_config: IngestConfig | None = None,
        config: AnalysisConfig | None = None,
        project_id: str | None = None,
    ) -> "Project":
        ingest_config = ingest_config or IngestConfig()
        doc = ingest_text(text, ingest_config)
        return cls(
            id=project_id or uuid.uuid4().hex[:12],
            doc=doc,
            ingest_config=ingest_config,
            config=config or AnalysisConfig(),
        )

    def import_annotations(self, payload: bytes | str) -> None:
        """Parse and adopt an interchange payload; a rejected payload leaves
        the project (and its revision) untouched."""
        layer = parse_annotations(payload, self.doc)
        registry = CharacterRegistry(
            layer, self.doc, auto_promote_threshold=self.config.auto_promote_threshold
        )
        self.layer = layer
        self.registry = registry
        self.revision += 1

    def status(self) -> AnalysisStatus:
        if self.result is None:
            return AnalysisStatus(state="empty", last_run=None)
        state = "current" if self.last_run == self.revision else "stale"
        return AnalysisStatus(state=state, last_run=self.last_run)

    # -- registry mutations (each bumps the revision) ------------------------

    def set_cluster_name(self, cluster_id: str, name: str | None) -> None:
        self._registry_or_raise().set_name(cluster_id, name)
        self.revision += 1

    def set_cluster_label(self, cluster_id: str, label: str) -> None:
        self._registry_or_raise().set_label(cluster_id, label)
        self.revision += 1

    def merge_clusters(self, source: str, target: str) -> None:
        self._registry_or_raise().merge_clusters(source, target)
        self.revision += 1

    def _registry_or_raise(self) -> CharacterRegistry:
        if self.registry is None:
            raise NotReady("no annotations imported yet")
        return self.registry

    # -- analysis -----------------------------------------------------------

    def embedding_table(self) -> EmbeddingTable | None:
        if self.config.embeddings is None:
            return None
        if self._table is None:
            try:
                self._table = load_embeddings(self.config.embeddings)
            except OSError as exc:
                raise NotReady(f"embedding table not readable: {exc}") from exc
        return self._table

    def run_analysis(self) -> AnalysisStatus:
        """Compute and cache all indicator records; idempotent per revision."""
        if self.layer is None or self.registry is None:
            raise NotReady("annotations must be imported before analysis")
        if not self.registry.characters:
            raise NotReady(
                "no characters: label clusters as characters or enable auto-promotion"
            )
        if self.last_run == self.revision and self.result is not None:
            return self.status()
        try:
            sentiment = load_sentiment_lexicon(self.config.sentiment_lexicon)
            emotion = load_emotion_lexicon(self.config.emotion_lexicon)
        except OSError as exc:
            raise NotReady(f"lexicon not readable: {exc}") from exc
        self.result = run_analysis(
            self.doc,
            self.layer,
            self.registry,
            self.config,
            sentiment_lexicon=sentiment,
            emotion_lexicon=emotion,
            table=self.embedding_table(),
        )
        self.last_run = self.revision
        return self.status()

    def snapshot(self) -> Snapshot:
        if self.layer is None or self.registry is None or self.result is None:
            raise NotReady("analysis has not been run")
        return Snapshot(
            doc=self.doc,
            layer=self.layer,
            registry=self.registry,
            result=self.result,
            table=self.embedding_table(),
            config=self.config,
        )

    # -- persistence ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "version": FILE_VERSION,
            "id": self.id,
            "ingest_config": self.ingest_config.to_dict(),
            "config": self.config.to_dict(),
            "document": self.doc.to_dict(),
            "annotations": self.layer.to_dict() if self.layer else None,
            "reviews": self.registry.reviews_to_list() if self.registry else None,
            "analysis": self.result.to_dict() if self.result else None,
            "revision": self.revision,
            "last_run": self.last_run,
        }


def save_project(project: Project, path: str | Path) -> None:
    Path(path).write_bytes(canonical_bytes(project.to_dict()))


def load_project(path: str | Path) -> Project:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CorruptFile(f"project file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CorruptFile("project file must hold a JSON object")
    version = data.get("version")
    if version != FILE_VERSION:
        raise VersionUnsupported(f"project file version {version!r}, supported: {FILE_VERSION}")
    try:
        doc = Document.from_dict(data["document"])
        config = AnalysisConfig.from_dict(data["config"])
        project = Project(
            id=data["id"],
            doc=doc,
            ingest_config=IngestConfig.from_dict(data["ingest_config"]),
            config=config,
            revision=data["revision"],
            last_run=data["last_run"],
        )
        if data.get("annotations") is not None:
            project.layer = parse_annotations(canonical_bytes(data["annotations"]), doc)
            reviews = [ClusterReview.from_dict(r) for r in data.get("reviews") or []]
            project.registry = CharacterRegistry(
                project.layer,
                doc,
                auto_promote_threshold=config.auto_promote_threshold,
                reviews=reviews,
            )
        if data.get("analysis") is not None:
            project.result = AnalysisResult.from_dict(data["analysis"])
    except CharlensError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptFile(f"project file is missing or corrupts required fields: {exc}") from exc
    return project

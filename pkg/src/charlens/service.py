"""HTTP API consumed by the companion UI.

Thin request handling over the library: every response body is produced by
the shared export serializers, so the service adds no computation of its
own. Requests touching one project are serialized through a per-project
lock, which gives mutations a total order and readers a consistent
snapshot.
"""

from __future__ import annotations

import threading
from collections import defaultdict

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import export
from .analysis import AnalysisConfig
from .corpus import IngestConfig, Span, slice_text
from .dynamics import ClusterConfig
from .errors import CharlensError, UnknownCluster, UnknownProject
from .jsonio import canonical_bytes
from .project import Project
from .views import build_matrix, build_wordzone, cooccurrence, default_context_labels, layout_contexts

_NOT_FOUND = (UnknownProject, UnknownCluster)


class CreateProjectBody(BaseModel):
    text: str
    id: str | None = None
    ingest: dict | None = None
    config: dict | None = None


class ClusterPatchBody(BaseModel):
    cluster_id: str
    name: str | None = None
    label: str | None = None


class MergeBody(BaseModel):
    source: str
    target: str


class ProjectStore:
    def __init__(self):
        self._projects: dict[str, Project] = {}
        self._locks: defaultdict[str, threading.RLock] = defaultdict(threading.RLock)

    def add(self, project: Project) -> None:
        self._projects[project.id] = project

    def get(self, project_id: str) -> Project:
        try:
            return self._projects[project_id]
        except KeyError:
            raise UnknownProject(f"no project with id {project_id!r}") from None

    def lock(self, project_id: str) -> threading.RLock:
        return self._locks[project_id]


def _json(payload, status_code: int = 200) -> Response:
    return Response(content=canonical_bytes(payload), media_type="application/json", status_code=status_code)


def _csv(payload: bytes) -> Response:
    return Response(content=payload, media_type="text/csv; charset=utf-8")


def _project_summary(project: Project) -> dict:
    summary = {
        "id": project.id,
        "revision": project.revision,
        "status": project.status().to_dict(),
        "source_meta": dict(project.doc.source_meta),
        "chapters": [
            {"index": c.index, "title": c.title, "span": c.span.as_pair()} for c in project.doc.chapters
        ],
        "characters": [],
    }
    if project.registry is not None:
        summary["characters"] = [
            {
                "id": c.id,
                "display_name": c.display_name,
                "mentions": len(c.mentions),
                "provisional": c.provisional,
            }
            for c in project.registry.characters
        ]
    return summary


def create_app(store: ProjectStore | None = None) -> FastAPI:
    store = store or ProjectStore()
    app = FastAPI(title="charlens", docs_url=None, redoc_url=None)
    app.state.store = store
    # the companion web client is served from its own origin
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(CharlensError)
    async def _charlens_error(_request: Request, exc: CharlensError):
        status = 404 if isinstance(exc, _NOT_FOUND) else 400
        body = {"code": exc.code, "message": exc.message}
        if exc.location is not None:
            body["location"] = exc.location
        return _json(body, status_code=status)

    @app.exception_handler(ValueError)
    async def _value_error(_request: Request, exc: ValueError):
        return _json({"code": "invalid_value", "message": str(exc)}, status_code=400)

    @app.exception_handler(RequestValidationError)
    async def _request_error(_request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        location = ".".join(str(part) for part in first.get("loc", ()))
        body = {"code": "bad_request", "message": first.get("msg", "invalid request")}
        if location:
            body["location"] = location
        return _json(body, status_code=400)

    @app.post("/projects")
    def create_project(body: CreateProjectBody):
        ingest = IngestConfig.from_dict(body.ingest or {})
        config = AnalysisConfig.from_dict(body.config or {})
        project = Project.create(body.text, ingest_config=ingest, config=config, project_id=body.id)
        store.add(project)
        return _json(_project_summary(project), status_code=201)

    @app.get("/projects/{project_id}")
    def get_project(project_id: str):
        with store.lock(project_id):
            return _json(_project_summary(store.get(project_id)))

    @app.post("/projects/{project_id}/annotations")
    def import_annotations(project_id: str, payload: dict):
        with store.lock(project_id):
            project = store.get(project_id)
            project.import_annotations(canonical_bytes(payload))
            return _json({"revision": project.revision, "clusters": len(project.layer.clusters)})

    @app.get("/projects/{project_id}/text")
    def get_text(project_id: str, start: int | None = None, end: int | None = None):
        with store.lock(project_id):
            project = store.get(project_id)
            if start is None and end is None:
                return _json({"start": 0, "end": len(project.doc.text), "text": project.doc.text})
            span = Span(start or 0, end if end is not None else len(project.doc.text))
            return _json({"start": span.start, "end": span.end, "text": slice_text(project.doc, span)})

    @app.get("/projects/{project_id}/clusters")
    def list_clusters(project_id: str):
        with store.lock(project_id):
            project = store.get(project_id)
            rows = project._registry_or_raise().list_clusters()
            return _json({"clusters": rows, "revision": project.revision})

    @app.patch("/projects/{project_id}/clusters")
    def patch_cluster(project_id: str, body: ClusterPatchBody):
        with store.lock(project_id):
            project = store.get(project_id)
            if body.name is not None:
                project.set_cluster_name(body.cluster_id, body.name)
            if body.label is not None:
                project.set_cluster_label(body.cluster_id, body.label)
            return _json({"revision": project.revision})

    @app.post("/projects/{project_id}/clusters/merge")
    def merge_clusters(project_id: str, body: MergeBody):
        with store.lock(project_id):
            project = store.get(project_id)
            project.merge_clusters(body.source, body.target)
            return _json({"revision": project.revision})

    @app.post("/projects/{project_id}/analyze")
    def analyze(project_id: str):
        with store.lock(project_id):
            project = store.get(project_id)
            return _json(project.run_analysis().to_dict())

    @app.get("/projects/{project_id}/status")
    def status(project_id: str):
        with store.lock(project_id):
            return _json(store.get(project_id).status().to_dict())

    @app.get("/projects/{project_id}/matrix")
    def matrix(
        project_id: str,
        kind: str,
        level: str = "chapter",
        chapter: int | None = None,
        characters: str | None = None,
        format: str = "json",
    ):
        with store.lock(project_id):
            project = store.get(project_id)
            chars = characters.split(",") if characters else None
            built = build_matrix(
                project.snapshot(), kind, level=level, characters=chars, focus_chapter=chapter
            )
            if format == "csv":
                return _csv(export.matrix_to_csv(built))
            return Response(content=export.matrix_to_json(built), media_type="application/json")

    @app.get("/projects/{project_id}/wordzone")
    def wordzone(project_id: str, character: str, kind: str = "actions", format: str = "json"):
        with store.lock(project_id):
            project = store.get(project_id)
            cfg = ClusterConfig(seed=project.config.seed, k=project.config.k)
            zone = build_wordzone(project.snapshot(), character, kind, cluster_cfg=cfg)
            if format == "csv":
                return _csv(export.wordzone_to_csv(zone))
            return Response(content=export.wordzone_to_json(zone), media_type="application/json")

    @app.get("/projects/{project_id}/cooccurrence")
    def cooccur(project_id: str, character: str, chapter: int):
        with store.lock(project_id):
            project = store.get(project_id)
            ids = sorted(cooccurrence(project.snapshot(), character, chapter))
            return _json({"character": character, "chapter": chapter, "cooccurring": ids})

    @app.get("/projects/{project_id}/contexts")
    def contexts(project_id: str, max_rows: int = 3, char_per_unit: float = 8.0, format: str = "json"):
        with store.lock(project_id):
            project = store.get(project_id)
            snapshot = project.snapshot()
            labels = default_context_labels(snapshot, char_per_unit=char_per_unit)
            layout = layout_contexts(labels, max_rows=max_rows, chapter_count=len(snapshot.doc.chapters))
            if format == "csv":
                return _csv(export.contexts_to_csv(layout))
            return Response(content=export.contexts_to_json(layout), media_type="application/json")

    return app

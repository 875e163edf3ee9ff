"""Scriptable front door mirroring the service.

Commands operate on a single project file: ingest a story, import the
annotation payload, curate clusters, run analysis, and export view
structures as JSON or CSV. Exit codes: 0 success, 1 validation error,
2 I/O error.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

from .analysis import AnalysisConfig
from .corpus import DEFAULT_HEADING_PATTERN, IngestConfig
from .dynamics import ClusterConfig
from .errors import CharlensError
from .export import (
    contexts_to_csv,
    contexts_to_json,
    matrix_to_csv,
    matrix_to_json,
    wordzone_to_csv,
    wordzone_to_json,
)
from .project import Project, load_project, save_project
from .views import build_matrix, build_wordzone, default_context_labels, layout_contexts


def engine_errors(fn):
    """Map engine and I/O failures to the exit-code contract."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CharlensError as exc:
            where = f" ({exc.location})" if exc.location else ""
            click.echo(f"error [{exc.code}]: {exc.message}{where}", err=True)
            sys.exit(1)
        except OSError as exc:
            click.echo(f"i/o error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def config_options(fn):
    fn = click.option("--sentiment-lexicon", type=click.Path(), default=None, help="Sentiment lexicon TSV.")(fn)
    fn = click.option("--emotion-lexicon", type=click.Path(), default=None, help="Emotion lexicon TSV.")(fn)
    fn = click.option("--embeddings", type=click.Path(), default=None, help="Embedding table file.")(fn)
    fn = click.option("--window", type=int, default=None, help="Smoothing window override (odd).")(fn)
    fn = click.option("--seed", type=int, default=None, help="Clustering seed.")(fn)
    fn = click.option("--k", type=int, default=None, help="Word-zone cluster count override.")(fn)
    fn = click.option("--auto-promote", type=int, default=None, help="Auto-promote clusters with at least N mentions.")(fn)
    fn = click.option("--presence-unit", type=click.Choice(["mentions", "sentences"]), default=None, help="Count presence in raw mentions or sentences with mentions.")(fn)
    return fn


def _apply_config(project: Project, **flags) -> None:
    current = project.config.to_dict()
    mapping = {
        "sentiment_lexicon": flags.get("sentiment_lexicon"),
        "emotion_lexicon": flags.get("emotion_lexicon"),
        "embeddings": flags.get("embeddings"),
        "window": flags.get("window"),
        "seed": flags.get("seed"),
        "k": flags.get("k"),
        "auto_promote_threshold": flags.get("auto_promote"),
        "presence_unit": flags.get("presence_unit"),
    }
    changed = False
    for key, value in mapping.items():
        if value is not None and current.get(key) != value:
            current[key] = value
            changed = True
    if changed:
        project.config = AnalysisConfig.from_dict(current)
        if project.registry is not None:
            project.registry.set_auto_promote(project.config.auto_promote_threshold)


@click.group()
def main():
    """Character-trait analytics for a single story."""


@main.command()
@click.argument("input_file", type=click.Path(exists=True))
@click.option("-o", "--output", "output_file", type=click.Path(), required=True, help="Project file to write.")
@click.option("--heading-pattern", default=DEFAULT_HEADING_PATTERN, show_default=False, help="Line-anchored chapter heading regex.")
@click.option("--strip-boilerplate", is_flag=True, help="Drop public-domain e-text header/footer blocks.")
@click.option("--id", "project_id", default=None, help="Explicit project id.")
@config_options
@engine_errors
def ingest(input_file, output_file, heading_pattern, strip_boilerplate, project_id, **flags):
    """Ingest a UTF-8 story file into a new project."""
    text = Path(input_file).read_text(encoding="utf-8")
    project = Project.create(
        text,
        ingest_config=IngestConfig(heading_pattern=heading_pattern, strip_boilerplate=strip_boilerplate),
        project_id=project_id,
    )
    _apply_config(project, **flags)
    save_project(project, output_file)
    click.echo(f"project {project.id}: {len(project.doc.chapters)} chapters, {len(project.doc.text)} characters of text")


@main.command("import-annotations")
@click.argument("project_file", type=click.Path(exists=True))
@click.argument("annotations_file", type=click.Path(exists=True))
@engine_errors
def import_annotations(project_file, annotations_file):
    """Validate and attach an annotation interchange file."""
    project = load_project(project_file)
    project.import_annotations(Path(annotations_file).read_bytes())
    save_project(project, project_file)
    click.echo(f"imported {len(project.layer.clusters)} clusters, revision {project.revision}")


@main.group()
def clusters():
    """Review coreference clusters: list, name, label, merge."""


@clusters.command("list")
@click.argument("project_file", type=click.Path(exists=True))
@engine_errors
def clusters_list(project_file):
    project = load_project(project_file)
    rows = project._registry_or_raise().list_clusters()
    for row in rows:
        merged = f" -> {row['merged_into']}" if row["merged_into"] else ""
        name = row["assigned_name"] or row["hint"] or ""
        samples = ", ".join(repr(s) for s in row["samples"])
        click.echo(
            f"{row['cluster_id']}{merged} [{row['label']}] ch={row['source_chapter']} "
            f"n={row['mention_count']} name={name!r} samples: {samples}"
        )
    click.echo(f"{len(rows)} clusters")


@clusters.command("name")
@click.argument("project_file", type=click.Path(exists=True))
@click.argument("cluster_id")
@click.argument("name")
@engine_errors
def clusters_name(project_file, cluster_id, name):
    project = load_project(project_file)
    project.set_cluster_name(cluster_id, name)
    save_project(project, project_file)
    click.echo(f"named {cluster_id} {name!r}, revision {project.revision}")


@clusters.command("label")
@click.argument("project_file", type=click.Path(exists=True))
@click.argument("cluster_id")
@click.argument("label", type=click.Choice(["unreviewed", "character", "context", "discarded"]))
@engine_errors
def clusters_label(project_file, cluster_id, label):
    project = load_project(project_file)
    project.set_cluster_label(cluster_id, label)
    save_project(project, project_file)
    click.echo(f"labeled {cluster_id} as {label}, revision {project.revision}")


@clusters.command("merge")
@click.argument("project_file", type=click.Path(exists=True))
@click.argument("source")
@click.argument("target")
@engine_errors
def clusters_merge(project_file, source, target):
    project = load_project(project_file)
    project.merge_clusters(source, target)
    save_project(project, project_file)
    click.echo(f"merged {source} into {target}, revision {project.revision}")


@main.command()
@click.argument("project_file", type=click.Path(exists=True))
@config_options
@engine_errors
def analyze(project_file, **flags):
    """Run the full indicator pipeline and cache the records."""
    project = load_project(project_file)
    _apply_config(project, **flags)
    status = project.run_analysis()
    save_project(project, project_file)
    result = project.result
    click.echo(
        f"analysis {status.state} at revision {status.last_run}: "
        f"{len(result.quotes)} quotes, {len(result.actions)} actions, "
        f"{len(result.definitions)} definitions, {len(result.sentiments)} sentences"
    )


@main.command()
@click.argument("project_file", type=click.Path(exists=True))
@click.argument("what", type=click.Choice(["matrix", "wordzone", "contexts"]))
@click.option("--kind", default=None, help="matrix: presence|speech|sentiment|emotion|action_change; wordzone: actions|definitions.")
@click.option("--level", default="chapter", type=click.Choice(["chapter", "sentence"]))
@click.option("--chapter", type=int, default=None, help="Focus chapter for sentence level.")
@click.option("--characters", default=None, help="Comma-separated character ids (default: all).")
@click.option("--character", default=None, help="Character id for wordzone export.")
@click.option("--max-rows", type=int, default=3, help="Context overlay rows.")
@click.option("--char-per-unit", type=float, default=8.0, help="Label width estimate: characters per chapter unit.")
@click.option("--format", "fmt", default="json", type=click.Choice(["json", "csv"]))
@click.option("-o", "--output", "output_file", type=click.Path(), default=None, help="Write here instead of stdout.")
@engine_errors
def export(project_file, what, kind, level, chapter, characters, character, max_rows, char_per_unit, fmt, output_file):
    """Export a view structure; deterministic for a given project and flags."""
    project = load_project(project_file)
    snapshot = project.snapshot()
    if what == "matrix":
        chars = characters.split(",") if characters else None
        matrix = build_matrix(snapshot, kind or "presence", level=level, characters=chars, focus_chapter=chapter)
        payload = matrix_to_csv(matrix) if fmt == "csv" else matrix_to_json(matrix)
    elif what == "wordzone":
        if not character:
            raise click.UsageError("wordzone export requires --character")
        cfg = ClusterConfig(seed=project.config.seed, k=project.config.k)
        zone = build_wordzone(snapshot, character, kind or "actions", cluster_cfg=cfg)
        payload = wordzone_to_csv(zone) if fmt == "csv" else wordzone_to_json(zone)
    else:
        labels = default_context_labels(snapshot, char_per_unit=char_per_unit)
        layout = layout_contexts(labels, max_rows=max_rows, chapter_count=len(snapshot.doc.chapters))
        payload = contexts_to_csv(layout) if fmt == "csv" else contexts_to_json(layout)
    if output_file:
        Path(output_file).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


@main.command()
@click.argument("project_files", type=click.Path(exists=True), nargs=-1)
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8765)
@engine_errors
def serve(project_files, host, port):
    """Serve the HTTP API, preloading any given project files."""
    import uvicorn

    from .service import ProjectStore, create_app

    store = ProjectStore()
    for path in project_files:
        project = load_project(path)
        store.add(project)
        click.echo(f"loaded project {project.id} from {path}")
    uvicorn.run(create_app(store), host=host, port=port)


if __name__ == "__main__":
    main()

"""Character-trait analytics for narrative fiction.

The pipeline: ingest a story (:mod:`charlens.corpus`), attach externally
produced linguistic annotations (:mod:`charlens.annotations`), curate the
detected coreference clusters into characters (:mod:`charlens.registry`),
extract the six trait-indicator record streams
(:mod:`charlens.extractors`), derive temporal dynamics
(:mod:`charlens.dynamics`), and assemble evidence-linked view structures
(:mod:`charlens.views`). :mod:`charlens.project` and
:mod:`charlens.service` wrap it all in a persistable project and an HTTP
API; :mod:`charlens.cli` is the scriptable front door.
"""

from .analysis import AnalysisConfig, AnalysisResult, Snapshot, run_analysis
from .annotations import (
    EMOTIONS,
    AnnotationLayer,
    parse_annotations,
    serialize_annotations,
    validate,
)
from .corpus import Chapter, Document, IngestConfig, Span, ingest_text, slice_text
from .project import Project, load_project, save_project
from .registry import CharacterRegistry

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "AnalysisResult",
    "AnnotationLayer",
    "Chapter",
    "CharacterRegistry",
    "Document",
    "EMOTIONS",
    "IngestConfig",
    "Project",
    "Snapshot",
    "Span",
    "__version__",
    "ingest_text",
    "load_project",
    "parse_annotations",
    "run_analysis",
    "save_project",
    "serialize_annotations",
    "slice_text",
    "validate",
]

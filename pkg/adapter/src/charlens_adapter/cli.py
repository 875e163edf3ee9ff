"""Command-line entry point: story text in, interchange JSON out."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .adapt import AdapterConfig, AdapterError, adapt_to_bytes
from .segmentation import DEFAULT_HEADING_PATTERN


@click.command()
@click.argument("input_file", type=click.Path(exists=True))
@click.option("-o", "--output", "output_file", type=click.Path(), required=True)
@click.option("--pipeline", type=click.Choice(["rule", "spacy"]), default="rule")
@click.option("--heading-pattern", default=DEFAULT_HEADING_PATTERN)
@click.option("--sentiment", is_flag=True, help="Emit naive per-sentence sentiment scores.")
@click.option("--spacy-model", default="en_core_web_sm")
@click.option("--config", "config_file", type=click.Path(exists=True), default=None,
              help="JSON config; explicit flags still win.")
def main(input_file, output_file, pipeline, heading_pattern, sentiment, spacy_model, config_file):
    """Convert a story file into an annotation interchange file."""
    cfg = AdapterConfig.from_file(config_file) if config_file else AdapterConfig()
    if pipeline != "rule" or cfg.pipeline == "rule":
        cfg.pipeline = pipeline
    if heading_pattern != DEFAULT_HEADING_PATTERN:
        cfg.heading_pattern = heading_pattern
    if sentiment:
        cfg.sentiment = True
    if spacy_model != "en_core_web_sm":
        cfg.spacy_model = spacy_model
    try:
        payload = adapt_to_bytes(Path(input_file).read_text(encoding="utf-8"), cfg)
    except AdapterError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    Path(output_file).write_bytes(payload)
    click.echo(f"wrote {output_file}")


if __name__ == "__main__":
    main()

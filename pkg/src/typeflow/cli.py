"""Command-line interface: corpus generation, ingestion, stats, and serving."""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import click

from . import _kernel
from .corpus import load_corpus
from .errors import TypeflowError
from .generate import GeneratorConfig, generate_synthetic


@click.group()
def main() -> None:
    """Keystroke-timing analytics: ingest, generate, inspect, serve."""


@main.command()
@click.argument("manifest", type=click.Path(exists=True, dir_okay=False))
def ingest(manifest: str) -> None:
    """Load a corpus manifest and report totals."""
    t0 = time.perf_counter()
    try:
        corpus = load_corpus(manifest)
    except TypeflowError as exc:
        raise click.ClickException(str(exc)) from exc
    elapsed = time.perf_counter() - t0
    keystrokes = sum(r.analysis.total_keystrokes for r in corpus.sessions.values())
    tokens = sum(r.analysis.token_count for r in corpus.sessions.values())
    click.echo(
        f"loaded {len(corpus.typists)} typists, {corpus.session_count} sessions, "
        f"{keystrokes} keystrokes, {tokens} tokens "
        f"in {elapsed:.2f}s (kernel backend: {_kernel.BACKEND})"
    )


@main.command()
@click.option("--seed", type=int, required=True, help="Deterministic RNG seed.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Generator config JSON; defaults apply when omitted.",
)
@click.option(
    "--out",
    "out_dir",
    type=click.Path(file_okay=False),
    required=True,
    help="Output corpus directory.",
)
def generate(seed: int, config_path: str | None, out_dir: str) -> None:
    """Write a deterministic synthetic corpus (manifest + keylogs)."""
    if config_path is not None:
        config = GeneratorConfig.from_dict(json.loads(Path(config_path).read_text()))
    else:
        config = GeneratorConfig()
    try:
        manifest = generate_synthetic(config, seed, out_dir)
    except TypeflowError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(f"wrote {manifest}")


@main.command()
@click.argument("manifest", type=click.Path(exists=True, dir_okay=False))
def stats(manifest: str) -> None:
    """Print per-session token and revision summaries."""
    try:
        corpus = load_corpus(manifest)
    except TypeflowError as exc:
        raise click.ClickException(str(exc)) from exc
    header = f"{'session':<12} {'typist':<8} {'keys':>8} {'tokens':>7} {'revs':>6} {'span_s':>8}  flags"
    click.echo(header)
    click.echo("-" * len(header))
    for sid, rec in corpus.sessions.items():
        a = rec.analysis
        flags = "short" if rec.warning_short else ""
        click.echo(
            f"{sid:<12} {rec.typist_id:<8} {a.total_keystrokes:>8} "
            f"{a.token_count:>7} {a.total_revisions:>6} "
            f"{a.curve.session_span_ms / 1000.0:>8.1f}  {flags}"
        )


@main.command()
@click.option("--manifest", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(manifest: str, port: int, host: str) -> None:
    """Load a corpus and serve the HTTP JSON API."""
    import uvicorn

    from .service import CorpusStore, create_app

    try:
        corpus = load_corpus(manifest)
    except TypeflowError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(
        f"serving {corpus.session_count} sessions on http://{host}:{port} "
        f"(corpus version {corpus.version})",
        err=True,
    )
    uvicorn.run(create_app(CorpusStore(corpus)), host=host, port=port, log_level="info")


if __name__ == "__main__":
    sys.exit(main())

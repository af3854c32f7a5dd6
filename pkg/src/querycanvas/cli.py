"""Batch command line for the pipeline plus the API server launcher.

Commands read and write the documented JSON formats (docs/formats.md). On
failure they print one machine-readable error document to stderr and exit
nonzero. Remote credentials are never command line arguments: they come from
QUERYCANVAS_REMOTE_USER / QUERYCANVAS_REMOTE_PASSWORD or a JSON credentials
file passed by path.
"""

from __future__ import annotations

import functools
import json
import os
from pathlib import Path

import click

from .errors import QuerycanvasError
from .graph_core import load_graph
from .layout import LayoutParams, layout
from .partitioner import partition
from .pattern_miner import mine as mine_patterns
from .query_handler import EmbeddedSpec, RemoteSpec, connect
from .query_model import QueryGraph
from .translator import translate as translate_query


def _reporting_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except QuerycanvasError as exc:
            click.echo(json.dumps(exc.to_document()), err=True)
            raise SystemExit(1)
        except ValueError as exc:
            click.echo(json.dumps({"error": {"code": "validation", "message": str(exc)}}), err=True)
            raise SystemExit(1)

    return wrapper


def _emit(doc: dict, output: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if output:
        Path(output).write_text(text + "\n")
    else:
        click.echo(text)


def _open_adapter(input_path, endpoint, database, timeout, credentials):
    if (input_path is None) == (endpoint is None):
        raise click.UsageError("provide exactly one of --input or --endpoint")
    if input_path is not None:
        return connect(EmbeddedSpec(load_graph(Path(input_path).read_text())))
    user = os.environ.get("QUERYCANVAS_REMOTE_USER")
    password = os.environ.get("QUERYCANVAS_REMOTE_PASSWORD")
    if credentials:
        doc = json.loads(Path(credentials).read_text())
        user = doc.get("user", user)
        password = doc.get("password", password)
    if not user or password is None:
        raise click.UsageError(
            "remote credentials come from QUERYCANVAS_REMOTE_USER / "
            "QUERYCANVAS_REMOTE_PASSWORD or a --credentials file"
        )
    return connect(
        RemoteSpec(endpoint=endpoint, user=user, password=password, database=database, timeout=timeout)
    )


_remote_options = [
    click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), default=None, help="Graph interchange file for an embedded store."),
    click.option("--endpoint", default=None, help="Remote HTTP endpoint, e.g. http://localhost:7474."),
    click.option("--database", default="neo4j", show_default=True),
    click.option("--timeout", type=float, default=30.0, show_default=True),
    click.option("--credentials", type=click.Path(exists=True, dir_okay=False), default=None, help="JSON file with user/password for --endpoint."),
]


def _with_remote_options(fn):
    for option in reversed(_remote_options):
        fn = option(fn)
    return fn


@click.group()
def main() -> None:
    """Visual graph query tooling: mine patterns, translate, execute, lay out."""


@main.command()
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None, help="JSON file with host/port/session_ttl.")
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
def serve(config, host, port) -> None:
    """Run the HTTP API server."""
    import uvicorn

    from .server import create_app

    settings = {"host": "127.0.0.1", "port": 8787, "session_ttl": 3600.0}
    if config:
        settings.update(json.loads(Path(config).read_text()))
    if host is not None:
        settings["host"] = host
    if port is not None:
        settings["port"] = port
    uvicorn.run(create_app(session_ttl=float(settings["session_ttl"])), host=settings["host"], port=int(settings["port"]))


@main.command("mine")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--k", type=int, required=True)
@click.option("--alpha", type=float, default=0.5, show_default=True)
@click.option("--tau-max", type=int, default=3, show_default=True)
@click.option("--target-part-size", type=int, default=30, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@_reporting_errors
def mine_cmd(input_path, k, alpha, tau_max, target_part_size, seed, output) -> None:
    """Mine a diversified pattern set from a graph file."""
    store = load_graph(Path(input_path).read_text())
    parts = partition(store, target_part_size=target_part_size, seed=seed)
    patterns = mine_patterns(parts, k=k, alpha=alpha, tau_max=tau_max)
    _emit(patterns.to_document(), output)


@main.command("translate")
@click.option("--query", "query_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--no-isomorphism", is_flag=True, help="Skip id() inequalities entirely.")
@click.option("--keep-trivial", is_flag=True, help="Keep inequalities the eliminator would drop.")
@_reporting_errors
def translate_cmd(query_path, no_isomorphism, keep_trivial) -> None:
    """Translate a query document to Cypher text."""
    query = QueryGraph.from_json(Path(query_path).read_text())
    text = translate_query(query, node_isomorphism=not no_isomorphism, eliminate=not keep_trivial)
    click.echo(text.text)


@main.command("exec")
@click.option("--query", "query_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@_with_remote_options
@_reporting_errors
def exec_cmd(query_path, output, input_path, endpoint, database, timeout, credentials) -> None:
    """Execute a query document against a store and lay out the result."""
    adapter = _open_adapter(input_path, endpoint, database, timeout, credentials)
    try:
        query = QueryGraph.from_json(Path(query_path).read_text())
        result = adapter.execute(query)
        from .graph_core import PropertyGraph

        placed = layout(PropertyGraph(result.distinct_nodes.values(), result.distinct_rels.values()))
        _emit({"result": result.to_document(), "layout": placed.to_document()}, output)
    finally:
        adapter.close()


@main.command("layout")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--d-opt", type=float, default=1.0, show_default=True)
@click.option("--r-max", type=float, default=4.0, show_default=True)
@click.option("--iterations", type=int, default=300, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@_reporting_errors
def layout_cmd(input_path, d_opt, r_max, iterations, seed, output) -> None:
    """Compute force-directed positions for a graph file."""
    store = load_graph(Path(input_path).read_text())
    params = LayoutParams(d_opt=d_opt, r_max=r_max, iterations=iterations, seed=seed)
    _emit(layout(store, params).to_document(), output)


@main.command("metadata")
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@_with_remote_options
@_reporting_errors
def metadata_cmd(output, input_path, endpoint, database, timeout, credentials) -> None:
    """Fetch store metadata (counts, registries, schema graph)."""
    adapter = _open_adapter(input_path, endpoint, database, timeout, credentials)
    try:
        _emit(adapter.fetch_metadata().to_document(), output)
    finally:
        adapter.close()


if __name__ == "__main__":
    main()

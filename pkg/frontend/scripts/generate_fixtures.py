"""Regenerate the frontend test fixtures from the Python package.

Run from the repository root with the package installed:

    python3 frontend/scripts/generate_fixtures.py

Writes apply-pattern golden cases directly and records API response
snapshots by driving a live server on a scratch port. The frontend tests
consume the output files; they never talk to Python themselves.
"""

from __future__ import annotations

import json
import socket
import subprocess
import sys
import time
from pathlib import Path
from types import SimpleNamespace

import httpx

from querycanvas.errors import QuerycanvasError
from querycanvas.query_model import QueryGraph
from querycanvas.translator import apply_pattern

FIXTURES = Path(__file__).resolve().parent.parent / "test" / "fixtures"

PATH_PATTERN = {
    "nodes": [{"id": "n1", "label": "Person"}, {"id": "n2", "label": "Movie"}, {"id": "n3"}],
    "relationships": [
        {"id": "r1", "source": "n1", "target": "n2", "type": "ACTED_IN"},
        {"id": "r2", "source": "n2", "target": "n3"},
    ],
}
DIRECTED_PATTERN = {
    "nodes": [{"id": "n1"}, {"id": "n2", "label": "Tag", "properties": {"kind": "core"}}],
    "relationships": [
        {"id": "r1", "source": "n1", "target": "n2", "type": "HAS", "directed": True,
         "properties": {"weight": 2}},
    ],
}
LOOP_PATTERN = {
    "nodes": [{"id": "n1", "label": "Person"}],
    "relationships": [{"id": "r1", "source": "n1", "target": "n1", "type": "KNOWS"}],
}

MOVIE_GRAPH = {
    "nodes": [
        {"id": "p1", "labels": ["Person"], "properties": {"name": "Ada"}},
        {"id": "p2", "labels": ["Person"], "properties": {"name": "Bo"}},
        {"id": "p3", "labels": ["Person"], "properties": {"name": "Cy"}},
        {"id": "m1", "labels": ["Movie"], "properties": {"title": "M1", "year": 1999}},
        {"id": "m2", "labels": ["Movie"], "properties": {"title": "M2", "year": 2003}},
    ],
    "relationships": [
        {"id": "x1", "type": "ACTED_IN", "source": "p1", "target": "m1", "properties": {}},
        {"id": "x2", "type": "ACTED_IN", "source": "p2", "target": "m1", "properties": {}},
        {"id": "x3", "type": "DIRECTED", "source": "p3", "target": "m2", "properties": {}},
        {"id": "x4", "type": "ACTED_IN", "source": "p3", "target": "m2", "properties": {}},
    ],
}

STAR_GRAPH = {
    "nodes": [{"id": "c", "labels": ["Hub"], "properties": {}}]
    + [{"id": f"s{i}", "labels": ["Leaf"], "properties": {}} for i in range(1, 6)],
    "relationships": [
        {"id": f"e{i}", "type": "SPOKE", "source": "c", "target": f"s{i}", "properties": {}}
        for i in range(1, 6)
    ],
}

EDGE_QUERY = {
    "nodes": [{"id": "a"}, {"id": "b"}],
    "relationships": [{"id": "e", "source": "a", "target": "b"}],
}

ACTED_QUERY = {
    "nodes": [{"id": "a", "label": "Person"}, {"id": "b", "label": "Movie"}],
    "relationships": [{"id": "e", "source": "a", "target": "b", "type": "ACTED_IN"}],
}


def write(name: str, payload) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    (FIXTURES / name).write_text(json.dumps(payload, indent=2) + "\n")


def generate_apply_pattern_cases() -> None:
    cases = []

    def case(name, query, pattern, anchor):
        entry = {"name": name, "query": query, "pattern_graph": pattern, "anchor": anchor}
        try:
            merged = apply_pattern(
                QueryGraph.from_document(query),
                SimpleNamespace(graph=QueryGraph.from_document(pattern)),
                anchor=anchor,
            )
            entry["expected"] = merged.to_document()
        except QuerycanvasError as exc:
            entry["error"] = exc.code
        except ValueError:
            entry["error"] = "validation"
        cases.append(entry)

    empty = {"nodes": [], "relationships": []}
    busy = {
        "nodes": [{"id": "n1", "label": "Person"}, {"id": "a"}],
        "relationships": [{"id": "r1", "source": "n1", "target": "a"}],
    }

    case("drop-on-empty-canvas", empty, PATH_PATTERN, None)
    case("drop-with-id-collisions", busy, PATH_PATTERN, None)
    case("anchor-same-label", busy, PATH_PATTERN, "n1")
    case("anchor-gains-label", busy, PATH_PATTERN, "a")
    case(
        "anchor-label-conflict",
        {"nodes": [{"id": "x", "label": "Movie"}], "relationships": []},
        PATH_PATTERN,
        "x",
    )
    case("directed-and-properties-copied", busy, DIRECTED_PATTERN, None)
    case("self-loop-pattern-anchored", busy, LOOP_PATTERN, "n1")
    case("repeated-drop-second-collision", cases[0]["expected"], PATH_PATTERN, None)
    case("anchor-missing-node", busy, PATH_PATTERN, "ghost")
    write("apply_pattern_cases.json", cases)


def write_inputs() -> None:
    """The request documents the snapshots were recorded with."""
    write(
        "inputs.json",
        {
            "movie_graph": MOVIE_GRAPH,
            "star_graph": STAR_GRAPH,
            "edge_query": EDGE_QUERY,
            "acted_query": ACTED_QUERY,
            "single_node_query": {"nodes": [{"id": "a"}], "relationships": []},
        },
    )


def free_port() -> int:
    probe = socket.socket()
    probe.bind(("127.0.0.1", 0))
    port = probe.getsockname()[1]
    probe.close()
    return port


def record_api_snapshots() -> None:
    port = free_port()
    server = subprocess.Popen(
        [sys.executable, "-m", "querycanvas.cli", "serve", "--port", str(port)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    base = f"http://127.0.0.1:{port}"
    try:
        with httpx.Client(base_url=base, timeout=10.0) as client:
            for _ in range(100):
                try:
                    client.get("/sessions/probe/metadata")
                    break
                except httpx.TransportError:
                    time.sleep(0.1)

            snapshots: dict = {}
            connected = client.post("/sessions", json={"embedded": {"graph": MOVIE_GRAPH}}).json()
            session = connected["session"]
            snapshots["connect_movie"] = connected
            snapshots["metadata_movie"] = client.get(f"/sessions/{session}/metadata").json()
            snapshots["translate_single_node"] = client.post(
                f"/sessions/{session}/translate",
                json={"query": {"nodes": [{"id": "a"}], "relationships": []}},
            ).json()
            snapshots["translate_acted_in"] = client.post(
                f"/sessions/{session}/translate", json={"query": ACTED_QUERY}
            ).json()
            client.post(f"/sessions/{session}/patterns", json={"k": 2, "tau_max": 2})
            while True:
                status = client.get(f"/sessions/{session}/patterns").json()
                if status["status"] != "running":
                    break
                time.sleep(0.05)
            snapshots["patterns_movie"] = status
            snapshots["execute_acted_in"] = client.post(f"/sessions/{session}/execute").json()

            star = client.post("/sessions", json={"embedded": {"graph": STAR_GRAPH}}).json()
            client.post(f"/sessions/{star['session']}/translate", json={"query": EDGE_QUERY})
            snapshots["execute_star_edge"] = client.post(
                f"/sessions/{star['session']}/execute"
            ).json()

            missing = client.get("/sessions/nope/result")
            snapshots["error_not_found"] = {
                "status": missing.status_code,
                "body": missing.json(),
            }
            write("api_snapshots.json", snapshots)
    finally:
        server.terminate()
        server.wait(timeout=10)


if __name__ == "__main__":
    generate_apply_pattern_cases()
    write_inputs()
    record_api_snapshots()
    print(f"fixtures written to {FIXTURES}")

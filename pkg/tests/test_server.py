"""HTTP API contract tests against the in-process app."""

from __future__ import annotations

import socket
import time

import pytest
from conftest import make_graph, make_query
from fastapi.testclient import TestClient
from stub_remote import StubServer

from querycanvas.graph_core import graph_to_document
from querycanvas.query_handler import EmbeddedSpec, connect
from querycanvas.query_handler import wire
from querycanvas.server import create_app


class FakeClock:
    def __init__(self):
        self.now = 0.0

    def __call__(self) -> float:
        return self.now


@pytest.fixture
def client():
    with TestClient(create_app()) as c:
        yield c


def movie_doc():
    return graph_to_document(
        make_graph(
            [
                ("p1", ["Person"], {"name": "Ada"}),
                ("p2", ["Person"], {"name": "Bo"}),
                ("p3", ["Person"], {"name": "Cy"}),
                ("m1", ["Movie"], {"title": "M1", "year": 1999}),
                ("m2", ["Movie"], {"title": "M2", "year": 2003}),
            ],
            [
                ("x1", "ACTED_IN", "p1", "m1"),
                ("x2", "ACTED_IN", "p2", "m1"),
                ("x3", "DIRECTED", "p3", "m2"),
                ("x4", "ACTED_IN", "p3", "m2"),
            ],
        )
    )


def triangle_doc():
    return graph_to_document(
        make_graph(
            [("a", ["A"]), ("b", ["A"]), ("c", ["A"])],
            [("e1", "T", "a", "b"), ("e2", "T", "b", "c"), ("e3", "T", "c", "a")],
        )
    )


def connect_embedded(client, doc=None, session=None):
    body = {"embedded": {"graph": doc or movie_doc()}}
    if session is not None:
        body["session"] = session
    response = client.post("/sessions", json=body)
    assert response.status_code == 200, response.text
    return response.json()


def wait_for_job(client, session_id, timeout=10.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        body = client.get(f"/sessions/{session_id}/patterns").json()
        if body["status"] != "running":
            return body
        time.sleep(0.02)
    raise AssertionError("mining job did not finish in time")


# -- connect + metadata -----------------------------------------------------


def test_connect_returns_session_and_eager_metadata(client):
    body = connect_embedded(client)
    assert isinstance(body["session"], str) and body["session"]
    expected = connect(
        EmbeddedSpec(
            make_graph(
                [
                    ("p1", ["Person"], {"name": "Ada"}),
                    ("p2", ["Person"], {"name": "Bo"}),
                    ("p3", ["Person"], {"name": "Cy"}),
                    ("m1", ["Movie"], {"title": "M1", "year": 1999}),
                    ("m2", ["Movie"], {"title": "M2", "year": 2003}),
                ],
                [
                    ("x1", "ACTED_IN", "p1", "m1"),
                    ("x2", "ACTED_IN", "p2", "m1"),
                    ("x3", "DIRECTED", "p3", "m2"),
                    ("x4", "ACTED_IN", "p3", "m2"),
                ],
            )
        )
    ).fetch_metadata()
    assert body["metadata"] == expected.to_document()
    got = client.get(f"/sessions/{body['session']}/metadata")
    assert got.status_code == 200
    assert got.json() == {"metadata": body["metadata"]}


def test_connect_requires_exactly_one_spec(client):
    response = client.post("/sessions", json={})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "validation"


def test_connect_rejects_malformed_graph(client):
    response = client.post("/sessions", json={"embedded": {"graph": {"nodes": 3}}})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "graph-format"


def test_unknown_session_is_not_found(client):
    for call in (
        lambda: client.get("/sessions/nope/metadata"),
        lambda: client.get("/sessions/nope/result"),
        lambda: client.post("/sessions/nope/execute"),
        lambda: client.get("/sessions/nope/patterns"),
    ):
        response = call()
        assert response.status_code == 404
        assert response.json()["error"]["code"] == "not-found"


def test_connect_remote_bad_credentials(client):
    with StubServer(make_graph([("a", [])])) as stub:
        response = client.post(
            "/sessions",
            json={
                "remote": {
                    "endpoint": stub.endpoint,
                    "user": stub.user,
                    "password": "wrong",
                }
            },
        )
    assert response.status_code == 401
    assert response.json()["error"]["code"] == "authentication"


def test_connect_remote_unreachable(client):
    probe = socket.socket()
    probe.bind(("127.0.0.1", 0))
    port = probe.getsockname()[1]
    probe.close()
    response = client.post(
        "/sessions",
        json={
            "remote": {
                "endpoint": f"http://127.0.0.1:{port}",
                "user": "u",
                "password": "p",
            }
        },
    )
    assert response.status_code == 502
    assert response.json()["error"]["code"] == "network"


# -- translate --------------------------------------------------------------


def test_translate_golden_single_node(client):
    sid = connect_embedded(client)["session"]
    response = client.post(
        f"/sessions/{sid}/translate",
        json={"query": {"nodes": [{"id": "a"}], "relationships": []}},
    )
    assert response.status_code == 200
    assert response.json() == {"text": "MATCH (n1)\nRETURN n1", "var_map": {"a": "n1"}}


def test_translate_empty_query_is_client_error(client):
    sid = connect_embedded(client)["session"]
    response = client.post(
        f"/sessions/{sid}/translate", json={"query": {"nodes": [], "relationships": []}}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "empty-query"


# -- execute + result -------------------------------------------------------


def test_execute_single_node_query_lays_out_records(client):
    doc = graph_to_document(make_graph([("a", []), ("b", []), ("c", [])]))
    sid = connect_embedded(client, doc)["session"]
    client.post(
        f"/sessions/{sid}/translate",
        json={"query": {"nodes": [{"id": "x"}], "relationships": []}},
    )
    response = client.post(f"/sessions/{sid}/execute")
    assert response.status_code == 200
    body = response.json()
    assert len(body["result"]["reference_list"]) == 3
    positions = body["layout"]["positions"]
    assert len(positions) == 3
    assert abs(sum(p["x"] for p in positions)) <= 1e-9
    assert abs(sum(p["y"] for p in positions)) <= 1e-9
    # stored result is served back unchanged
    assert client.get(f"/sessions/{sid}/result").json() == body


def test_execute_trap_query_returns_empty(client):
    doc = graph_to_document(
        make_graph([("a", []), ("b", [])], [("e1", "T", "a", "b"), ("e2", "T", "a", "b")])
    )
    sid = connect_embedded(client, doc)["session"]
    query = make_query(
        [("n2",), ("n1",), ("n3",)], [("r1", "n2", "n1"), ("r2", "n1", "n3")]
    ).to_document()
    client.post(f"/sessions/{sid}/translate", json={"query": query})
    body = client.post(f"/sessions/{sid}/execute").json()
    assert body["result"]["reference_list"] == []
    assert body["layout"]["positions"] == []


def test_execute_without_query_is_client_error(client):
    sid = connect_embedded(client)["session"]
    response = client.post(f"/sessions/{sid}/execute")
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "empty-query"


def test_result_before_any_execute_is_not_found(client):
    sid = connect_embedded(client)["session"]
    response = client.get(f"/sessions/{sid}/result")
    assert response.status_code == 404


def test_execute_gate_rejects_concurrent_run():
    app = create_app()
    with TestClient(app) as client:
        sid = connect_embedded(client)["session"]
        client.post(
            f"/sessions/{sid}/translate",
            json={"query": {"nodes": [{"id": "a"}], "relationships": []}},
        )
        state = app.state.sessions.get(sid)
        assert state.execute_gate.acquire(blocking=False)
        try:
            response = client.post(f"/sessions/{sid}/execute")
        finally:
            state.execute_gate.release()
        assert response.status_code == 409
        assert response.json()["error"]["code"] == "job-in-progress"


def test_remote_timeout_surfaces_as_gateway_timeout(client):
    with StubServer(make_graph([("a", []), ("b", [])], [("e1", "T", "a", "b")])) as stub:
        body = client.post(
            "/sessions",
            json={
                "remote": {
                    "endpoint": stub.endpoint,
                    "user": stub.user,
                    "password": stub.password,
                    "timeout": 0.3,
                }
            },
        ).json()
        sid = body["session"]
        client.post(
            f"/sessions/{sid}/translate",
            json={"query": {"nodes": [{"id": "a"}], "relationships": []}},
        )
        stub.state.slow_seconds = 2.0
        response = client.post(f"/sessions/{sid}/execute")
    assert response.status_code == 504
    assert response.json()["error"]["code"] == "timeout"


# -- pattern jobs -----------------------------------------------------------


def test_pattern_job_on_triangle(client):
    sid = connect_embedded(client, triangle_doc())["session"]
    assert client.get(f"/sessions/{sid}/patterns").json() == {"status": "none"}
    response = client.post(
        f"/sessions/{sid}/patterns", json={"k": 1, "tau_max": 1}
    )
    assert response.status_code == 202
    body = wait_for_job(client, sid)
    assert body["status"] == "done", body
    patterns = body["patterns"]
    assert patterns["k"] == 1
    assert len(patterns["members"]) == 1
    assert patterns["total_cover_size"] == 3


def test_pattern_job_validates_arguments(client):
    sid = connect_embedded(client)["session"]
    response = client.post(f"/sessions/{sid}/patterns", json={"k": 0})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "validation"


def test_pattern_job_in_progress_conflict():
    app = create_app()
    with TestClient(app) as client:
        sid = connect_embedded(client)["session"]
        app.state.sessions.get(sid).job = {"status": "running"}
        response = client.post(f"/sessions/{sid}/patterns", json={"k": 1})
        assert response.status_code == 409
        assert response.json()["error"]["code"] == "job-in-progress"


def test_remote_mining_exports_store_and_matches_embedded(client):
    with StubServer(
        make_graph(
            [
                ("p1", ["Person"], {"name": "Ada"}),
                ("p2", ["Person"], {"name": "Bo"}),
                ("p3", ["Person"], {"name": "Cy"}),
                ("m1", ["Movie"], {"title": "M1", "year": 1999}),
                ("m2", ["Movie"], {"title": "M2", "year": 2003}),
            ],
            [
                ("x1", "ACTED_IN", "p1", "m1"),
                ("x2", "ACTED_IN", "p2", "m1"),
                ("x3", "DIRECTED", "p3", "m2"),
                ("x4", "ACTED_IN", "p3", "m2"),
            ],
        )
    ) as stub:
        remote_sid = client.post(
            "/sessions",
            json={
                "remote": {
                    "endpoint": stub.endpoint,
                    "user": stub.user,
                    "password": stub.password,
                }
            },
        ).json()["session"]
        client.post(f"/sessions/{remote_sid}/patterns", json={"k": 2, "tau_max": 1})
        remote = wait_for_job(client, remote_sid)
        assert wire.EXPORT_NODES in stub.state.statement_log
        assert wire.EXPORT_RELS in stub.state.statement_log

    embedded_sid = connect_embedded(client)["session"]
    client.post(f"/sessions/{embedded_sid}/patterns", json={"k": 2, "tau_max": 1})
    embedded = wait_for_job(client, embedded_sid)
    assert remote["status"] == "done" and embedded["status"] == "done"
    r, e = remote["patterns"], embedded["patterns"]
    assert r["total_cover_size"] == e["total_cover_size"]
    assert [m["graph"] for m in r["members"]] == [m["graph"] for m in e["members"]]


# -- session lifecycle ------------------------------------------------------


def test_reconnect_clears_derived_state(client):
    sid = connect_embedded(client)["session"]
    client.post(
        f"/sessions/{sid}/translate",
        json={"query": {"nodes": [{"id": "a"}], "relationships": []}},
    )
    client.post(f"/sessions/{sid}/execute")
    client.post(f"/sessions/{sid}/patterns", json={"k": 1, "tau_max": 1})
    wait_for_job(client, sid)

    body = connect_embedded(client, session=sid)
    assert body["session"] == sid
    assert client.get(f"/sessions/{sid}/patterns").json() == {"status": "none"}
    assert client.get(f"/sessions/{sid}/result").status_code == 404
    assert client.post(f"/sessions/{sid}/execute").status_code == 400


def test_reconnect_unknown_session_is_not_found(client):
    response = client.post(
        "/sessions", json={"session": "ghost", "embedded": {"graph": movie_doc()}}
    )
    assert response.status_code == 404


def test_sessions_expire_after_ttl():
    clock = FakeClock()
    with TestClient(create_app(session_ttl=10.0, clock=clock)) as client:
        sid = connect_embedded(client)["session"]
        clock.now = 5.0
        assert client.get(f"/sessions/{sid}/metadata").status_code == 200
        clock.now = 16.0  # refreshed at 5.0, expires at 15.0
        assert client.get(f"/sessions/{sid}/metadata").status_code == 404

"""Reference matcher vs the exhaustive oracle, plus the frozen spec examples."""

from querycanvas.graph_core import IsomorphismMode, match_subgraph

from conftest import make_graph, make_query, random_graph
from oracles import brute_force_match

REL = IsomorphismMode.REL_ISO_ONLY
NODE = IsomorphismMode.NODE_ISO


def embeddings_as_pairs(embeddings):
    return sorted(
        ((dict(e.node_map), dict(e.rel_map)) for e in embeddings),
        key=lambda pair: (sorted(pair[0].items()), sorted(pair[1].items())),
    )


def assert_matches_oracle(query, store):
    for mode, injective in ((REL, False), (NODE, True)):
        got = embeddings_as_pairs(match_subgraph(query, store, mode))
        expected = brute_force_match(query, store, injective)
        assert got == expected, f"mismatch under {mode}"


def test_single_unconstrained_node_matches_every_node():
    store = make_graph([("a", []), ("b", ["X"]), ("c", ["Y"])])
    q = make_query([("n",)])
    for mode in (REL, NODE):
        result = match_subgraph(q, store, mode)
        assert [e.node_map["n"] for e in result] == ["a", "b", "c"]


def test_parallel_pair_store_counts(two_hop_query, parallel_pair_store):
    # frozen from the exhaustive oracle: 4 embeddings allowing node reuse,
    # none once nodes must be distinct
    oracle_rel = brute_force_match(two_hop_query, parallel_pair_store, node_injective=False)
    oracle_node = brute_force_match(two_hop_query, parallel_pair_store, node_injective=True)
    assert len(oracle_rel) == 4
    assert len(oracle_node) == 0

    assert len(match_subgraph(two_hop_query, parallel_pair_store, REL)) == 4
    assert len(match_subgraph(two_hop_query, parallel_pair_store, NODE)) == 0


def test_single_edge_store_rejects_two_hop(two_hop_query, single_edge_store):
    # one relationship cannot serve both hops: rel bindings are injective
    assert match_subgraph(two_hop_query, single_edge_store, REL) == []
    assert match_subgraph(two_hop_query, single_edge_store, NODE) == []


def test_label_and_property_constraints(movie_store):
    q = make_query(
        [("p", "Person"), ("m", "Movie", {"title": "M2"})],
        [("r", "p", "m", "ACTED_IN")],
    )
    result = match_subgraph(q, movie_store, NODE)
    assert len(result) == 1
    assert result[0].node_map == {"p": "p3", "m": "m2"}
    assert result[0].rel_map == {"r": "x4"}


def test_directed_vs_undirected():
    store = make_graph([("a", []), ("b", [])], [("r", "T", "a", "b")])
    undirected = make_query([("x",), ("y",)], [("q", "x", "y", None)])
    directed = make_query([("x",), ("y",)], [("q", "x", "y", None, True)])
    assert len(match_subgraph(undirected, store, NODE)) == 2
    result = match_subgraph(directed, store, NODE)
    assert len(result) == 1
    assert result[0].node_map == {"x": "a", "y": "b"}


def test_query_self_loop():
    store = make_graph([("a", []), ("b", [])], [("s", "T", "a", "a"), ("r", "T", "a", "b")])
    q = make_query([("x",)], [("q", "x", "x")])
    result = match_subgraph(q, store, NODE)
    assert len(result) == 1
    assert result[0].rel_map["q"] == "s"


def test_disconnected_query_components():
    store = make_graph(
        [("a", []), ("b", []), ("c", [])],
        [("r1", "T", "a", "b"), ("r2", "T", "b", "c")],
    )
    q = make_query([("x",), ("y",), ("z",)], [("q", "x", "y")])  # z isolated
    assert_matches_oracle(q, store)


def test_node_iso_subset_of_rel_iso():
    for seed in range(8):
        store = random_graph(seed, n_nodes=8, n_rels=12)
        q = make_query([("x",), ("y",), ("z",)], [("q1", "x", "y"), ("q2", "y", "z")])
        rel_pairs = embeddings_as_pairs(match_subgraph(q, store, REL))
        node_pairs = embeddings_as_pairs(match_subgraph(q, store, NODE))
        for pair in node_pairs:
            assert pair in rel_pairs
        for node_map, _ in node_pairs:
            assert len(set(node_map.values())) == len(node_map)


def test_matcher_agrees_with_oracle_on_random_instances():
    queries = [
        make_query([("x",), ("y",)], [("q", "x", "y")]),
        make_query([("x", "A"), ("y", "B")], [("q", "x", "y", "T")]),
        make_query([("x",), ("y",), ("z",)], [("q1", "x", "y"), ("q2", "y", "z")]),
        make_query(
            [("x",), ("y",), ("z",)],
            [("q1", "x", "y"), ("q2", "y", "z"), ("q3", "z", "x")],
        ),
        make_query([("x", "A"), ("y",)], []),
    ]
    for seed in range(6):
        store = random_graph(seed, n_nodes=6, n_rels=8, props=True)
        for q in queries:
            assert_matches_oracle(q, store)


def test_deterministic_order():
    store = random_graph(1, n_nodes=7, n_rels=9)
    q = make_query([("x",), ("y",)], [("q", "x", "y")])
    first = [e.key(q) for e in match_subgraph(q, store, REL)]
    second = [e.key(q) for e in match_subgraph(q, store, REL)]
    assert first == second == sorted(first)


def test_empty_query_returns_nothing():
    assert match_subgraph(make_query([]), random_graph(0), REL) == []

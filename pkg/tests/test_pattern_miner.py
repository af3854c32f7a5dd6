"""Pattern miner: coverage, enumeration, swapping, and the brute-force oracle."""

import pytest

from querycanvas.errors import InstanceTooLargeError
from querycanvas.partitioner import PartitionSet, partition
from querycanvas.pattern_miner import (
    Pattern,
    PatternSet,
    SwapScores,
    brute_force_optimum,
    canonicalize,
    coverage,
    enumerate_candidates,
    mine,
    swap_decision,
)

from conftest import make_graph, make_query, random_graph
from oracles import brute_force_cover, exhaustive_shape_keys, shape_canonical_key


def single_part(store):
    return PartitionSet(
        parts=[store],
        assignment={node_id: 0 for node_id in store.nodes},
        cut_edges=[],
    )


def triangle(labels=("X", "X", "X")):
    return make_graph(
        [("a", [labels[0]]), ("b", [labels[1]]), ("c", [labels[2]])],
        [("r1", "T", "a", "b"), ("r2", "T", "b", "c"), ("r3", "T", "c", "a")],
    )


def all_shape_keys(parts, tau_max):
    """Chain enumeration levels and return one key set per level."""
    per_level = []
    frontier = []
    for tau in range(1, tau_max + 1):
        frontier = list(enumerate_candidates(parts, tau, frontier))
        per_level.append({shape_canonical_key(s.labels, s.edges) for s in frontier})
    return per_level


# -- coverage -----------------------------------------------------------------


def test_coverage_absent_label_pair_is_empty():
    parts = single_part(triangle())
    shape = make_query([("p1", "Y"), ("p2", "Z")], [("e1", "p1", "p2", "T")])
    assert coverage(shape, parts) == frozenset()


def test_coverage_unlabeled_edge_covers_triangle():
    store = triangle()
    parts = single_part(store)
    shape = make_query([("p1",), ("p2",)], [("e1", "p1", "p2")])
    cover = coverage(shape, parts)
    assert cover == frozenset({(0, "r1"), (0, "r2"), (0, "r3")})
    assert cover == frozenset(brute_force_cover(shape, parts.parts))


def test_coverage_two_edge_path_covers_star():
    store = make_graph(
        [("hub", ["X"]), ("l1", ["X"]), ("l2", ["X"]), ("l3", ["X"])],
        [("r1", "T", "hub", "l1"), ("r2", "T", "hub", "l2"), ("r3", "T", "hub", "l3")],
    )
    parts = single_part(store)
    shape = make_query(
        [("p1",), ("p2",), ("p3",)], [("e1", "p1", "p2"), ("e2", "p2", "p3")]
    )
    cover = coverage(shape, parts)
    assert cover == frozenset({(0, "r1"), (0, "r2"), (0, "r3")})
    assert cover == frozenset(brute_force_cover(shape, parts.parts))


def test_coverage_matches_brute_force_on_random_parts():
    for seed in range(4):
        store = random_graph(seed, n_nodes=6, n_rels=8)
        parts = partition(store, target_part_size=4, seed=seed)
        shapes = list(enumerate_candidates(parts, 1))
        shapes += list(enumerate_candidates(parts, 2, shapes))
        for shape in shapes:
            query = shape.to_query_graph()
            assert coverage(query, parts) == frozenset(
                brute_force_cover(query, parts.parts)
            )


# -- enumeration --------------------------------------------------------------


def test_single_edge_part_levels():
    store = make_graph([("a", ["X"]), ("b", ["Y"])], [("r1", "T", "a", "b")])
    parts = single_part(store)
    level1 = list(enumerate_candidates(parts, 1))
    assert len(level1) == 1
    assert list(enumerate_candidates(parts, 2, level1)) == []


def test_triangle_levels_match_exhaustive_enumeration():
    parts = single_part(triangle())
    levels = all_shape_keys(parts, 3)
    assert len(levels[0]) == 1
    assert len(levels[1]) == 1
    # three distinct relationships folded as a walk give the open 3-edge path
    # alongside the closed triangle
    path3 = shape_canonical_key(
        ("X", "X", "X", "X"), ((0, 1, "T"), (1, 2, "T"), (2, 3, "T"))
    )
    cycle3 = shape_canonical_key(("X", "X", "X"), ((0, 1, "T"), (0, 2, "T"), (1, 2, "T")))
    assert levels[2] == {path3, cycle3}
    for tau in (1, 2, 3):
        assert levels[tau - 1] == exhaustive_shape_keys(parts.parts[0], tau)


def test_path_store_level_three_is_single_shape():
    store = make_graph(
        [(n, ["X"]) for n in "abcd"],
        [("r1", "T", "a", "b"), ("r2", "T", "b", "c"), ("r3", "T", "c", "d")],
    )
    parts = single_part(store)
    levels = all_shape_keys(parts, 3)
    assert len(levels[2]) == 1
    assert levels[2] == exhaustive_shape_keys(store, 3)


def test_self_loop_yields_loop_and_open_edge_shapes():
    store = make_graph([("a", ["X"])], [("r1", "T", "a", "a")])
    parts = single_part(store)
    level1 = {shape_canonical_key(s.labels, s.edges) for s in enumerate_candidates(parts, 1)}
    loop = shape_canonical_key(("X",), ((0, 0, "T"),))
    open_edge = shape_canonical_key(("X", "X"), ((0, 1, "T"),))
    assert level1 == {loop, open_edge}
    assert level1 == exhaustive_shape_keys(store, 1)


def test_enumeration_matches_exhaustive_oracle_on_random_parts():
    for seed in range(6):
        store = random_graph(seed, n_nodes=5, n_rels=7)
        parts = single_part(store)
        levels = all_shape_keys(parts, 3)
        for tau in (1, 2, 3):
            assert levels[tau - 1] == exhaustive_shape_keys(store, tau), (seed, tau)


def test_enumeration_is_deterministic():
    store = random_graph(9, n_nodes=8, n_rels=12)
    parts = single_part(store)

    def run():
        frontier = []
        codes = []
        for tau in (1, 2):
            frontier = list(enumerate_candidates(parts, tau, frontier))
            codes.append([s.code for s in frontier])
        return codes

    assert run() == run()


# -- swapping -----------------------------------------------------------------


def test_swap_decision_frozen_examples():
    assert swap_decision(SwapScores(10, 2, 0), total_cover_size=12, k=3, alpha=0.5) is True
    # threshold exactly met is not enough: 5 > 5 fails
    assert swap_decision(SwapScores(5, 2, 0), total_cover_size=12, k=3, alpha=0.5) is False
    assert swap_decision(SwapScores(1, 0, None), total_cover_size=0, k=1, alpha=0.0) is True


def test_mine_single_edge_store():
    store = make_graph([("a", ["X"]), ("b", ["Y"])], [("r1", "T", "a", "b")])
    result = mine(single_part(store), k=1, tau_max=2)
    assert len(result.members) == 1
    assert result.total_cover == frozenset({(0, "r1")})


def test_mine_triangle_uniform_labels_single_shape():
    result = mine(single_part(triangle()), k=3, alpha=0.5, tau_max=1)
    assert len(result.members) == 1
    assert len(result.total_cover) == 3


def test_mine_triangle_distinct_labels_three_shapes():
    parts = single_part(triangle(labels=("A", "B", "C")))
    result = mine(parts, k=3, alpha=0.5, tau_max=1)
    assert len(result.members) == 3
    assert len(result.total_cover) == 3
    optimum = brute_force_optimum(parts, k=3, tau_max=1)
    assert len(result.total_cover) == len(optimum.total_cover)


def test_mine_swaps_strictly_increase_coverage():
    saw_swap = False
    for seed in range(8):
        store = random_graph(seed, n_nodes=8, n_rels=14)
        parts = partition(store, target_part_size=6, seed=seed)
        trace = []
        result = mine(parts, k=2, alpha=0.0, tau_max=3, trace=trace)
        for _, victim, scores, before, after in trace:
            saw_swap = True
            assert after > before
            assert 0 <= victim < len(result.members)
        assert result.total_cover == frozenset().union(
            *(m.cover for m in result.members)
        )
    assert saw_swap


def test_mine_invariants_on_random_graphs():
    for seed in range(6):
        store = random_graph(seed, n_nodes=9, n_rels=12)
        parts = partition(store, target_part_size=5, seed=seed)
        result = mine(parts, k=3, alpha=0.5, tau_max=2)
        assert len(result.members) <= 3
        for member in result.members:
            assert member.cover  # occurs in the parts
            assert 1 <= member.size <= 2
        assert result.total_cover == frozenset().union(
            *(m.cover for m in result.members)
        )


def test_mined_coverage_within_quarter_of_optimum_sample():
    for seed in range(6):
        store = random_graph(seed, n_nodes=7, n_rels=10)
        parts = partition(store, target_part_size=7, seed=seed)
        for alpha in (0.0, 0.5, 1.0):
            mined = mine(parts, k=2, alpha=alpha, tau_max=2)
            optimum = brute_force_optimum(parts, k=2, tau_max=2)
            assert len(mined.total_cover) * 4 >= len(optimum.total_cover)


# -- brute-force oracle -------------------------------------------------------


def test_brute_force_optimum_small_cases():
    single = make_graph([("a", ["X"]), ("b", ["Y"])], [("r1", "T", "a", "b")])
    assert len(brute_force_optimum(single_part(single), k=1, tau_max=1).total_cover) == 1

    two = make_graph(
        [("a", ["A"]), ("b", ["A"]), ("c", ["B"]), ("d", ["B"])],
        [("r1", "T", "a", "b"), ("r2", "T", "c", "d")],
    )
    assert len(brute_force_optimum(single_part(two), k=1, tau_max=1).total_cover) == 1
    assert len(brute_force_optimum(single_part(two), k=2, tau_max=1).total_cover) == 2


def test_brute_force_optimum_refuses_large_instances():
    big = make_graph(
        [(f"n{i}", ["X"]) for i in range(32)],
        [(f"r{i}", "T", f"n{i}", f"n{i + 1}") for i in range(31)],
    )
    with pytest.raises(InstanceTooLargeError):
        brute_force_optimum(single_part(big), k=1, tau_max=1)
    small = single_part(triangle())
    with pytest.raises(InstanceTooLargeError):
        brute_force_optimum(small, k=1, tau_max=4)
    with pytest.raises(InstanceTooLargeError):
        brute_force_optimum(small, k=5, tau_max=1)


# -- serialization and validation ---------------------------------------------


def test_pattern_set_document_round_trip():
    store = random_graph(2, n_nodes=7, n_rels=9)
    parts = partition(store, target_part_size=7, seed=2)
    mined = mine(parts, k=2, alpha=0.5, tau_max=2)
    document = mined.to_document()
    restored = PatternSet.from_document(document)
    assert restored.k == mined.k
    assert restored.alpha == mined.alpha
    assert restored.total_cover == mined.total_cover
    assert [m.to_document() for m in restored.members] == [
        m.to_document() for m in mined.members
    ]
    assert document["total_cover_size"] == len(mined.total_cover)


def test_pattern_rejects_disconnected_shape():
    graph = make_query(
        [("p1",), ("p2",), ("p3",), ("p4",)],
        [("e1", "p1", "p2"), ("e2", "p3", "p4")],
    )
    with pytest.raises(ValueError):
        Pattern(graph=graph, size=2, cover=frozenset({(0, "r1")}))


def test_canonicalize_is_permutation_invariant():
    a = canonicalize(("X", None, "Y"), ((0, 1, "T"), (1, 2, "S")))
    b = canonicalize(("Y", None, "X"), ((2, 1, "T"), (1, 0, "S")))
    assert a.code == b.code

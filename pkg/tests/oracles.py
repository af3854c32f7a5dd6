"""Independent brute-force oracles used to freeze expected values.

These deliberately re-implement semantics by exhaustive enumeration and stay
independent of the production code paths they check.
"""

from __future__ import annotations

import itertools


def _scalar_equal(a, b):
    if isinstance(a, bool) != isinstance(b, bool):
        return False
    return a == b


def brute_force_match(query, store, node_injective: bool):
    """Every node assignment crossed with every injective rel assignment,
    accepted iff all constraints hold. Returns sorted (node_map, rel_map)
    pairs of plain dicts."""
    qnode_ids = [n.id for n in query.qnodes]
    qnodes = {n.id: n for n in query.qnodes}
    qrels = list(query.qrels)
    node_ids = sorted(store.nodes)
    rel_ids = sorted(store.relationships)
    found = []

    if not qnode_ids:
        return []

    for node_images in itertools.product(node_ids, repeat=len(qnode_ids)):
        if node_injective and len(set(node_images)) != len(node_images):
            continue
        node_map = dict(zip(qnode_ids, node_images))
        ok = True
        for qid, image in node_map.items():
            qnode = qnodes[qid]
            node = store.nodes[image]
            if qnode.label is not None and qnode.label not in node.labels:
                ok = False
                break
            for key, value in qnode.properties.items():
                if key not in node.properties or not _scalar_equal(node.properties[key], value):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue

        for rel_images in itertools.permutations(rel_ids, len(qrels)):
            good = True
            for qrel, rel_id in zip(qrels, rel_images):
                rel = store.relationships[rel_id]
                if qrel.type is not None and rel.type != qrel.type:
                    good = False
                    break
                for key, value in qrel.properties.items():
                    if key not in rel.properties or not _scalar_equal(rel.properties[key], value):
                        good = False
                        break
                if not good:
                    break
                s, t = node_map[qrel.source], node_map[qrel.target]
                if qrel.directed:
                    if not (rel.source == s and rel.target == t):
                        good = False
                        break
                else:
                    if not (
                        (rel.source == s and rel.target == t)
                        or (rel.source == t and rel.target == s)
                    ):
                        good = False
                        break
            if good:
                found.append((dict(node_map), dict(zip((r.id for r in qrels), rel_images))))

    found.sort(key=lambda pair: (sorted(pair[0].items()), sorted(pair[1].items())))
    return found


def exhaustive_best_bipartition(store):
    """Minimum cut over all 2-way node splits; returns (best_cut, best_split)."""
    node_ids = sorted(store.nodes)
    n = len(node_ids)
    best = None
    for bits in range(1, 2 ** (n - 1)):
        side = {node_ids[i]: (bits >> i) & 1 for i in range(n)}
        cut = sum(
            1 for rel in store.relationships.values() if side[rel.source] != side[rel.target]
        )
        if best is None or cut < best[0]:
            best = (cut, side)
    return best


def set_partitions(items):
    """All partitions of a list into non-empty blocks."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for partial in set_partitions(rest):
        for index in range(len(partial)):
            yield partial[:index] + [[head] + partial[index]] + partial[index + 1 :]
        yield [[head]] + partial


def shape_canonical_key(labels, edges):
    """Smallest relabeling of (node labels, undirected typed edges)."""
    n = len(labels)
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = [None] * n
        for old, new in enumerate(perm):
            relabeled[new] = labels[old]
        label_key = tuple((0, "") if l is None else (1, l) for l in relabeled)
        edge_key = tuple(
            sorted((min(perm[a], perm[b]), max(perm[a], perm[b]), t) for a, b, t in edges)
        )
        key = (label_key, edge_key)
        if best is None or key < best:
            best = key
    return best


def _quotient_connected(n_blocks, edges):
    if n_blocks == 1:
        return True
    neighbors = {i: set() for i in range(n_blocks)}
    for a, b, _ in edges:
        neighbors[a].add(b)
        neighbors[b].add(a)
    stack, reached = [0], {0}
    while stack:
        for nb in neighbors[stack.pop()]:
            if nb not in reached:
                reached.add(nb)
                stack.append(nb)
    return len(reached) == n_blocks


def exhaustive_shape_keys(part, tau):
    """Canonical keys of every connected tau-edge shape with a label-preserving,
    relationship-injective embedding into the part.

    Construction: pick tau distinct relationships, give every endpoint its own
    slot (self-loops get two slots of the same node), then merge slots only
    within the same store node in every possible way; connected quotients are
    exactly the occurring shapes, annotated with each node's smallest label."""
    rel_ids = sorted(part.relationships)
    keys = set()
    for combo in itertools.combinations(rel_ids, tau):
        slots = []
        edges = []
        for rel_id in combo:
            rel = part.relationships[rel_id]
            slots.append(rel.source)
            slots.append(rel.target)
            edges.append((len(slots) - 2, len(slots) - 1, rel.type))
        groups = {}
        for index, node_id in enumerate(slots):
            groups.setdefault(node_id, []).append(index)
        per_group = [list(set_partitions(group)) for group in groups.values()]
        for choice in itertools.product(*per_group):
            class_of = {}
            blocks = []
            for partition_blocks in choice:
                for block in partition_blocks:
                    for slot in block:
                        class_of[slot] = len(blocks)
                    blocks.append(block)
            labels = []
            for block in blocks:
                node = part.nodes[slots[block[0]]]
                labels.append(min(node.labels) if node.labels else None)
            qedges = tuple(
                (min(class_of[a], class_of[b]), max(class_of[a], class_of[b]), t)
                for a, b, t in edges
            )
            if not _quotient_connected(len(blocks), qedges):
                continue
            keys.add(shape_canonical_key(tuple(labels), qedges))
    return keys


def brute_force_cover(query, parts):
    """Edges covered by any embedding, via the brute-force matcher."""
    covered = set()
    for index, part in enumerate(parts):
        for _, rel_map in brute_force_match(query, part, node_injective=False):
            for rel_id in rel_map.values():
                covered.add((index, rel_id))
    return covered

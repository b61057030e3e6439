import random

import pytest

from oracles import bfs_hops, union_adjacency, weak_components
from builders import random_network

from weftnet.errors import ProjectionOverflowError, UnknownLayerError, UnknownNodeError
from weftnet.model import EdgeTraversal, Network, create_nodeset
from weftnet.query import (
    check_edge_exists,
    connected_components,
    degree,
    density,
    get_edge_value,
    get_node_alters,
    projected_count_from_sizes,
    projected_edge_count,
    shortest_path,
    summarize_attribute,
)


def small_net():
    """Three layers over nodes 0..5: a symmetric chain, a directed pair and
    an affiliation layer bridging 3-4-5."""
    net = Network(create_nodeset(count=6))
    net.add_layer("chain", 1)
    for a, b in ((0, 1), (1, 2), (2, 3)):
        net.add_edge("chain", a, b)
    net.add_layer("dir", 1, directed=True, valued=True)
    net.add_edge("dir", 0, 2, 4.0)
    net.add_layer("aff", 2)
    net.add_hyperedge("aff", "g", [3, 4, 5])
    return net


def test_check_and_get_edge():
    net = small_net()
    assert check_edge_exists(net, "chain", 0, 1)
    assert not check_edge_exists(net, "chain", 0, 3)
    assert check_edge_exists(net, "dir", 0, 2, EdgeTraversal.OUT)
    assert not check_edge_exists(net, "dir", 2, 0, EdgeTraversal.OUT)
    assert check_edge_exists(net, "aff", 4, 5)
    assert get_edge_value(net, "dir", 0, 2) == 4.0
    assert get_edge_value(net, "aff", 3, 5) == 1.0
    with pytest.raises(UnknownNodeError):
        check_edge_exists(net, "chain", 0, 99)
    with pytest.raises(UnknownLayerError):
        get_edge_value(net, "nope", 0, 1)


def test_alters_union_over_layers():
    net = small_net()
    assert get_node_alters(net, 2) == {0, 1, 3}
    assert get_node_alters(net, 2, ["chain"]) == {1, 3}
    assert get_node_alters(net, 2, ["dir"], EdgeTraversal.IN) == {0}
    assert get_node_alters(net, 2, ["dir"], EdgeTraversal.OUT) == set()
    assert get_node_alters(net, 4) == {3, 5}
    assert get_node_alters(net, 4, []) == set()
    assert get_node_alters(net, 5, ["chain"]) == set()
    with pytest.raises(UnknownNodeError):
        get_node_alters(net, 42)


def test_degree_variants():
    net = small_net()
    assert degree(net, "chain", 2) == 2
    assert degree(net, "dir", 0, EdgeTraversal.OUT) == 1
    assert degree(net, "aff", 4) == 2
    assert degree(net, "aff", 4, projected=False) == 1


def test_density_denominators():
    net = Network(create_nodeset(count=5))
    net.add_layer("sym", 1)
    net.add_edge("sym", 0, 1)
    net.add_edge("sym", 1, 2)
    assert density(net, "sym") == 2 / 10

    net.add_layer("dir", 1, directed=True)
    net.add_edge("dir", 0, 1)
    net.add_edge("dir", 1, 0)
    net.add_edge("dir", 2, 3)
    assert density(net, "dir") == 3 / 20

    net.add_layer("symself", 1, allow_self_ties=True)
    net.add_edge("symself", 0, 0)
    assert density(net, "symself") == 1 / 15

    net.add_layer("dirself", 1, directed=True, allow_self_ties=True)
    net.add_edge("dirself", 4, 4)
    assert density(net, "dirself") == 1 / 25

    net.add_layer("aff", 2)
    net.add_hyperedge("aff", "a", [0, 1, 2])
    net.add_hyperedge("aff", "b", [0])
    assert density(net, "aff") == 4 / 10


def test_density_empty_cases():
    net = Network(create_nodeset(count=0))
    net.add_layer("a", 1)
    net.add_layer("w", 2)
    assert density(net, "a") == 0.0
    assert density(net, "w") == 0.0
    net2 = Network(create_nodeset(count=3))
    net2.add_layer("w", 2)
    assert density(net2, "w") == 0.0  # no hyperedges yet


def test_components_multilayer():
    net = small_net()
    labels = connected_components(net)
    # chain 0-1-2-3 joins the hyperedge block 3-4-5; everything is one piece
    assert set(labels) == {0, 1, 2, 3, 4, 5}
    assert set(labels.values()) == {0}
    only_aff = connected_components(net, ["aff"])
    assert only_aff[4] == 3 and only_aff[5] == 3
    assert only_aff[0] == 0 and only_aff[1] == 1  # isolated singletons


def test_components_treat_directed_as_weak():
    net = Network(create_nodeset(count=4))
    net.add_layer("d", 1, directed=True)
    net.add_edge("d", 0, 1)
    net.add_edge("d", 2, 1)
    labels = connected_components(net)
    assert labels[0] == labels[1] == labels[2] == 0
    assert labels[3] == 3


def test_components_match_oracle_on_random_instances():
    rng = random.Random(2024)
    for _ in range(15):
        net = random_network(rng, node_count=rng.randint(2, 25))
        assert connected_components(net) == weak_components(net)


def test_shortest_path_basics():
    net = small_net()
    r = shortest_path(net, 0, 0)
    assert r.length == 0 and r.nodes == [0]
    # the directed shortcut 0->2 takes a hop off the chain route
    r = shortest_path(net, 0, 5)
    assert r.length == 3 and r.nodes == [0, 2, 3, 5]
    r = shortest_path(net, 0, 3)
    assert r.length == 2 and r.nodes == [0, 2, 3]
    assert shortest_path(net, 3, 5).length == 1
    assert shortest_path(net, 0, 5, ["chain"]) is None
    with pytest.raises(UnknownNodeError):
        shortest_path(net, 0, 99)


def test_shortest_path_respects_direction():
    net = Network(create_nodeset(count=3))
    net.add_layer("d", 1, directed=True)
    net.add_edge("d", 0, 1)
    net.add_edge("d", 1, 2)
    assert shortest_path(net, 0, 2).length == 2
    assert shortest_path(net, 2, 0) is None


def test_shortest_path_prefers_smaller_ids():
    net = Network(create_nodeset(count=4))
    net.add_layer("a", 1)
    for a, b in ((0, 1), (0, 2), (1, 3), (2, 3)):
        net.add_edge("a", a, b)
    assert shortest_path(net, 0, 3).nodes == [0, 1, 3]


def test_shortest_path_matches_bfs_oracle():
    rng = random.Random(77)
    for _ in range(20):
        net = random_network(rng, node_count=rng.randint(2, 20))
        ids = net.nodeset.sorted_ids()
        adj = union_adjacency(net)
        src = rng.choice(ids)
        hops = bfs_hops(adj, src)
        for dst in rng.sample(ids, min(5, len(ids))):
            got = shortest_path(net, src, dst)
            if dst in hops:
                assert got is not None and got.length == hops[dst]
            else:
                assert got is None


def test_shortest_path_nodes_form_a_real_path():
    rng = random.Random(31)
    for _ in range(10):
        net = random_network(rng, node_count=15)
        ids = net.nodeset.sorted_ids()
        adj = union_adjacency(net)
        a, b = rng.sample(ids, 2)
        r = shortest_path(net, a, b)
        if r is None:
            continue
        assert r.nodes[0] == a and r.nodes[-1] == b
        assert len(r.nodes) == r.length + 1
        for u, v in zip(r.nodes, r.nodes[1:]):
            assert v in adj.get(u, ())


def test_projected_count_from_sizes():
    assert projected_count_from_sizes([]) == 0
    assert projected_count_from_sizes([0, 1, 2, 3]) == 0 + 0 + 1 + 3
    assert projected_count_from_sizes([40000]) == 40000 * 39999 // 2
    with pytest.raises(ProjectionOverflowError):
        projected_count_from_sizes([2**33])


def test_projected_edge_count_on_network():
    net = small_net()
    assert projected_edge_count(net, "aff") == 3
    net.add_hyperedge("aff", "g2", [0, 1, 2, 3])
    assert projected_edge_count(net, "aff") == 3 + 6


def test_summarize_attribute_numeric():
    ns = create_nodeset(count=4)
    ns.set_attribute(0, "age", 10)
    ns.set_attribute(1, "age", 30)
    ns.set_attribute(2, "age", 20)
    s = summarize_attribute(ns, "age")
    assert s == {"count": 3, "type": "int", "min": 10, "max": 30, "mean": 20.0}


def test_summarize_attribute_sparse_and_missing():
    ns = create_nodeset(count=4)
    assert summarize_attribute(ns, "ghost") == {"count": 0}
    ns.set_attribute(0, "x", 1.5)
    ns.remove_attribute(0, "x")
    # schema remembers the type even with zero carriers
    assert summarize_attribute(ns, "x") == {"count": 0, "type": "float"}


def test_summarize_attribute_bool_and_char():
    ns = create_nodeset(count=5)
    for node, flag in ((0, True), (1, False), (2, True)):
        ns.set_attribute(node, "ok", flag)
    assert summarize_attribute(ns, "ok") == {"count": 3, "type": "bool", "true_count": 2}
    for node, ch in ((0, "b"), (1, "a"), (2, "b"), (3, "b")):
        ns.set_attribute(node, "tag", ch)
    s = summarize_attribute(ns, "tag")
    assert s["frequencies"] == {"a": 1, "b": 3}
    assert list(s["frequencies"]) == ["a", "b"]

"""Random instance construction shared by the equivalence and round-trip tests."""

from __future__ import annotations

import random

from weftnet.model import AttrType, LayerMode, Network, Nodeset, quantize_f32


def random_node_ids(rng: random.Random, count: int, spread: int = 1 << 20) -> list[int]:
    return sorted(rng.sample(range(spread), count))


def random_nodeset(rng: random.Random, count: int, with_attrs: bool = True) -> Nodeset:
    ns = Nodeset()
    ids = random_node_ids(rng, count)
    for node in ids:
        ns.add_node(node)
    if not with_attrs or not ids:
        return ns
    schema = {
        "age": AttrType.INT,
        "score": AttrType.FLOAT,
        "active": AttrType.BOOL,
        "tag": AttrType.CHAR,
    }
    for node in ids:
        for name, kind in schema.items():
            if rng.random() < 0.4:
                continue
            if kind is AttrType.INT:
                value = rng.randint(-1000, 1000)
            elif kind is AttrType.FLOAT:
                value = quantize_f32(rng.uniform(-10, 10))
            elif kind is AttrType.BOOL:
                value = rng.random() < 0.5
            else:
                value = rng.choice("abc#\té")
            ns.set_attribute(node, name, value)
    return ns


def add_random_one_mode(net: Network, name: str, rng: random.Random, *,
                        directed: bool | None = None,
                        valued: bool | None = None,
                        density: float = 0.08) -> None:
    directed = rng.random() < 0.5 if directed is None else directed
    valued = rng.random() < 0.5 if valued is None else valued
    allow_self = rng.random() < 0.3
    inbound = directed and rng.random() < 0.7
    net.add_layer(name, LayerMode.ONE, directed=directed, valued=valued,
                  allow_self_ties=allow_self, store_inbound=inbound)
    ids = net.nodeset.sorted_ids()
    for a in ids:
        for b in ids:
            if not directed and b < a:
                continue
            if a == b and not allow_self:
                continue
            if rng.random() < density:
                value = quantize_f32(rng.uniform(0.5, 9.5)) if valued else 1.0
                net.add_edge(name, a, b, value)


def add_random_two_mode(net: Network, name: str, rng: random.Random, *,
                        hyperedges: int = 8, mean_size: float = 4.0) -> None:
    net.add_layer(name, LayerMode.TWO)
    ids = net.nodeset.sorted_ids()
    for i in range(hyperedges):
        size = min(len(ids), max(0, int(rng.gauss(mean_size, mean_size / 2))))
        members = rng.sample(ids, size) if size else []
        net.add_hyperedge(name, f"h{i}", members)


def random_network(rng: random.Random, node_count: int = 30) -> Network:
    ns = random_nodeset(rng, node_count, with_attrs=rng.random() < 0.7)
    net = Network(ns)
    layer_count = rng.randint(1, 4)
    for i in range(layer_count):
        if rng.random() < 0.4:
            add_random_two_mode(net, f"two{i}", rng,
                                hyperedges=rng.randint(0, 10),
                                mean_size=rng.uniform(2, 6))
        else:
            add_random_one_mode(net, f"one{i}", rng,
                                density=rng.uniform(0.02, 0.15))
    return net

"""Extensional equality between in-memory objects, used by round-trip tests."""

from weftnet.model import LayerOneMode, Network, Nodeset


def nodeset_state(ns: Nodeset):
    return (
        set(ns.node_ids()),
        dict(ns.schema),
        {node: dict(attrs) for node, attrs in ns.attributed_nodes.items()},
    )


def nodeset_equal(a: Nodeset, b: Nodeset) -> bool:
    return nodeset_state(a) == nodeset_state(b)


def layer_state(layer):
    spec = layer.spec
    head = (spec.name, spec.mode, spec.directed, spec.valued,
            spec.allow_self_ties, spec.store_inbound)
    if isinstance(layer, LayerOneMode):
        if spec.valued:
            edges = {a: dict(cell) for a, cell in layer.out_edges.items()}
        else:
            edges = {a: set(cell) for a, cell in layer.out_edges.items()}
        return head + (edges, layer.edge_count, layer.in_edges is None)
    hyper = {name: set(members) for name, members in layer.hyperedges.items()}
    return head + (hyper, layer.membership_total)


def network_state(net: Network):
    return (
        nodeset_state(net.nodeset),
        list(net.layers),
        {name: layer_state(layer) for name, layer in net.layers.items()},
    )


def network_equal(a: Network, b: Network) -> bool:
    return network_state(a) == network_state(b)
